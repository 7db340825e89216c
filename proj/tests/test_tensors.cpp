#include <doctest.h>

#include "iforms/error.hpp"
#include "iforms/render.hpp"
#include "iforms/tensor.hpp"

namespace {

using namespace iforms;

const Space& plane() {
    static const Space s({"x", "y"});
    return s;
}

Generator g(std::initializer_list<int> slots, std::size_t coord) {
    return Generator{IndexSet(slots), coord};
}

Poly px() { return Poly::coordinate(plane(), "x"); }
Poly py() { return Poly::coordinate(plane(), "y"); }
Poly one() { return Poly::one(plane()); }

Form mono(Poly coeff, std::vector<Generator> gens) {
    return Form::monomial(std::move(coeff), std::move(gens));
}

// dx (x) dy, the running example
CovariantTensor dx_dy() {
    CovariantTensor t(plane(), 2);
    t.set_component({0, 1}, one());
    return t;
}

}  // namespace

TEST_CASE("component access validates") {
    CovariantTensor t = dx_dy();
    CHECK(t.component({0, 1}) == one());
    CHECK(t.component({1, 0}).is_zero());
    CHECK_THROWS_AS(t.component({0}), Error);
    CHECK_THROWS_AS(t.set_component({0, 5}, one()), Error);
    // zero assignments erase the entry
    t.set_component({0, 1}, Poly(plane()));
    CHECK(t.is_zero());
}

TEST_CASE("embedding into the forms algebra") {
    CHECK(embed(dx_dy()) == mono(one(), {g({1}, 0), g({2}, 1)}));
    CHECK(embed(CovariantTensor::scalar(px())) == Form::from_poly(px()));
    CHECK(embed(CovariantTensor(plane(), 3)).is_zero());
    CovariantTensor t(plane(), 1);
    t.set_component({1}, px());
    CHECK(embed(t) == mono(px(), {g({1}, 1)}));
    CHECK(to_text(dx_dy()) == "(x,y): 1");
}

TEST_CASE("extraction inverts embedding") {
    CovariantTensor t(plane(), 2);
    t.set_component({0, 1}, px() + py());
    t.set_component({1, 1}, px().scaled(Rational(2, 3)));
    CHECK(extract(embed(t), 2) == t);
    CHECK(extract(Form::zero(plane()), 2) == CovariantTensor(plane(), 2));
    CHECK(extract(embed(CovariantTensor::scalar(px())), 0) == CovariantTensor::scalar(px()));
}

TEST_CASE("tensor characterization and obstructions") {
    Form good = embed(dx_dy());
    Form bad = good + Form::from_generator(plane(), g({1, 2}, 0));
    auto accepted = is_tensor(good, 2);
    CHECK(accepted.tensor == dx_dy());
    CHECK(accepted.obstruction.is_zero());
    auto rejected = is_tensor(bad, 2);
    CHECK(!rejected.tensor);
    CHECK(rejected.obstruction == Form::from_generator(plane(), g({1, 2}, 0)));
    CHECK_THROWS_AS(extract(bad, 2), Error);
    // wrong homogeneity is a hard error, not an obstruction
    CHECK_THROWS_AS(is_tensor(mono(one(), {g({1}, 0)}), 2), Error);
    CHECK_THROWS_AS(is_tensor(good, 3), Error);
}

TEST_CASE("insertion evaluation equals component contraction") {
    VectorField X(plane(), {py(), Poly(plane())});        // y d/dx
    VectorField Y(plane(), {Poly(plane()), px()});        // x d/dy
    CovariantTensor t = dx_dy();
    CHECK(evaluate_insertion(embed(t), {X, Y}) == py() * px());
    CHECK(evaluate_components(t, {X, Y}) == py() * px());
    // the obstruction breaks A-linearity: the d_{1,2} term differentiates the
    // scalar pulled into slot 1 and slot 2 then picks up that derivative
    Form bad = embed(t) + Form::from_generator(plane(), g({1, 2}, 0));
    VectorField E0 = VectorField::coordinate(plane(), 0);
    Poly base = evaluate_insertion(bad, {E0, E0});
    Poly scaled = evaluate_insertion(bad, {E0.scaled_by(px()), E0});
    CHECK(scaled != px() * base);
    CHECK_THROWS_AS(evaluate_insertion(embed(t), {X}), Error);
}

TEST_CASE("slot insertion reduces the order") {
    VectorField X(plane(), {py(), px() * px()});
    CovariantTensor t(plane(), 2);
    t.set_component({0, 1}, px());
    t.set_component({1, 0}, one());
    // contract the first argument: result_mu = sum_nu T_{nu,mu} X^nu
    CovariantTensor expected(plane(), 1);
    expected.set_component({0}, px() * px());  // T_{y,x} X^y
    expected.set_component({1}, px() * py());  // T_{x,y} X^x
    CHECK(extract(insert_slot(embed(t), X, 1, 2), 1) == expected);
    CHECK_THROWS_AS(insert_slot(embed(t), X, 3, 2), Error);
}

TEST_CASE("argument permutation matches slot relabeling") {
    CovariantTensor t = dx_dy();
    CovariantTensor swapped = permute({2, 1}, t);
    CHECK(swapped.component({1, 0}) == one());
    CHECK(swapped.component({0, 1}).is_zero());
    CHECK(embed(swapped) == kappa(SlotMap::transposition(1, 2), embed(t)));
    CHECK(permute({2, 1}, swapped) == t);
    CHECK_THROWS_AS(permute({1}, t), Error);
    CHECK_THROWS_AS(permute({1, 1}, t), Error);
}

TEST_CASE("tensor product") {
    CovariantTensor a(plane(), 1);
    a.set_component({0}, px());
    CovariantTensor b(plane(), 1);
    b.set_component({1}, py());
    CovariantTensor ab = tensor_product(a, b);
    CHECK(ab.order() == 2);
    CHECK(ab.component({0, 1}) == px() * py());
    CHECK(embed(ab) == embed(a).wedge(kappa(SlotMap::shift_up(1), embed(b))));
    CHECK(tensor_product(CovariantTensor::scalar(px()), b).component({1}) == px() * py());
}

TEST_CASE("lie derivative of tensors") {
    VectorField X(plane(), {py(), Poly(plane())});  // y d/dx
    CovariantTensor dx(plane(), 1);
    dx.set_component({0}, one());
    // L_X dx = d(X^x) = dy
    CovariantTensor expected(plane(), 1);
    expected.set_component({1}, one());
    CHECK(lie_tensor(X, dx) == expected);
    CHECK(embed(lie_tensor(X, dx)) == lie(X, embed(dx)));
    // order 2 compatibility with the forms-side Lie derivative
    CovariantTensor t(plane(), 2);
    t.set_component({0, 0}, px() * py());
    t.set_component({1, 0}, py());
    CHECK(embed(lie_tensor(X, t)) == lie(X, embed(t)));
    // Leibniz over the tensor product, compared on the forms side
    CovariantTensor a(plane(), 1);
    a.set_component({1}, px());
    CHECK(embed(lie_tensor(X, tensor_product(dx, a))) ==
          embed(tensor_product(lie_tensor(X, dx), a)) +
              embed(tensor_product(dx, lie_tensor(X, a))));
}
