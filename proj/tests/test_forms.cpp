#include <doctest.h>

#include "iforms/error.hpp"
#include "iforms/form.hpp"
#include "iforms/json_io.hpp"
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

}  // namespace

TEST_CASE("odd generators square to zero") {
    CHECK(mono(one(), {g({1}, 0), g({1}, 0)}).is_zero());
    CHECK(mono(px(), {g({2}, 1), g({1}, 0), g({2}, 1)}).is_zero());
    // |K| = 3 is odd as well
    CHECK(mono(one(), {g({1, 2, 3}, 0), g({1, 2, 3}, 0)}).is_zero());
}

TEST_CASE("even generators accumulate exponents") {
    Form w = mono(one(), {g({1, 2}, 0), g({1, 2}, 0)});
    CHECK(!w.is_zero());
    REQUIRE(w.terms().size() == 1);
    const auto& [factors, coeff] = *w.terms().begin();
    REQUIRE(factors.size() == 1);
    CHECK(factors[0].first == g({1, 2}, 0));
    CHECK(factors[0].second == 2);
    CHECK(coeff == one());
    CHECK(to_text(w) == "d{1,2}(x)^2");
}

TEST_CASE("normalization sorts with the Koszul sign") {
    // same slot, different coordinates: anticommute
    CHECK(mono(one(), {g({1}, 1), g({1}, 0)}) == -mono(one(), {g({1}, 0), g({1}, 1)}));
    // disjoint slots: commute even though both factors are odd
    CHECK(mono(one(), {g({2}, 0), g({1}, 0)}) == mono(one(), {g({1}, 0), g({2}, 0)}));
    // the sign counts the slot intersection, not |K| parity: |{1} n {1,2}| = 1
    CHECK(mono(one(), {g({1}, 0), g({1, 2}, 1)}) == -mono(one(), {g({1, 2}, 1), g({1}, 0)}));
    // a truly disjoint even factor does commute
    CHECK(mono(one(), {g({1}, 0), g({2, 3}, 1)}) == mono(one(), {g({2, 3}, 1), g({1}, 0)}));
    // overlapping odd sets anticommute: |{1,2} n {2,3}| = 1
    CHECK(mono(one(), {g({2, 3}, 0), g({1, 2}, 0)}) == -mono(one(), {g({1, 2}, 0), g({2, 3}, 0)}));
}

TEST_CASE("wedge algebra") {
    Form a = mono(px(), {g({1}, 0)});
    Form b = mono(py(), {g({2}, 1)});
    Form c = mono(one(), {g({1}, 1)});
    CHECK(a.wedge(b) == mono(px() * py(), {g({1}, 0), g({2}, 1)}));
    CHECK(a.wedge(c) == -c.wedge(a));
    CHECK(a.wedge(a).is_zero());
    CHECK(a.wedge(b.wedge(c)) == a.wedge(b).wedge(c));
    CHECK(Form::unit(plane()).wedge(a) == a);
    CHECK(a.wedge(Form::zero(plane())).is_zero());
    // distributes over addition
    CHECK(a.wedge(b + c) == a.wedge(b) + a.wedge(c));
}

TEST_CASE("coefficients merge and cancel") {
    Form w = mono(px(), {g({1}, 0)}) + mono(-px(), {g({1}, 0)});
    CHECK(w.is_zero());
    Form v = mono(px(), {g({1}, 0)}) + mono(py(), {g({1}, 0)});
    CHECK(v == mono(px() + py(), {g({1}, 0)}));
    CHECK(v - v == Form::zero(plane()));
}

TEST_CASE("multidegree components partition a form") {
    Form w = mono(px(), {g({1}, 0)}) + mono(one(), {g({1, 2}, 1)}) + Form::from_poly(py());
    auto parts = w.multidegree_components();
    CHECK(parts.size() == 3);
    Form sum(plane());
    for (const auto& [deg, piece] : parts) sum += piece;
    CHECK(sum == w);
    MultiDegree e12 = MultiDegree::basis(1) + MultiDegree::basis(2);
    CHECK(parts.at(e12) == mono(one(), {g({1, 2}, 1)}));
    CHECK(parts.at(MultiDegree{}) == Form::from_poly(py()));
}

TEST_CASE("max_slot and coefficient extraction") {
    CHECK(Form::from_poly(px()).max_slot() == 0);
    CHECK(mono(one(), {g({1}, 0), g({3}, 1)}).max_slot() == 3);
    CHECK(Form::from_poly(px()).as_coefficient() == px());
    CHECK(Form::zero(plane()).as_coefficient() == Poly(plane()));
    CHECK(!mono(one(), {g({1}, 0)}).as_coefficient());
}

TEST_CASE("factor degree and flatten") {
    Form w = mono(one(), {g({1, 2}, 0), g({1, 2}, 0), g({3}, 1)});
    const auto& factors = w.terms().begin()->first;
    MultiDegree deg = Form::factor_degree(factors);
    CHECK(deg.at(1) == 2);
    CHECK(deg.at(2) == 2);
    CHECK(deg.at(3) == 1);
    auto flat = Form::flatten(factors);
    CHECK(flat.size() == 3);
    CHECK(flat[0] == g({1, 2}, 0));
    CHECK(flat[1] == g({1, 2}, 0));
    CHECK(flat[2] == g({3}, 1));
}

TEST_CASE("space mismatch is an error") {
    Space other({"u", "v"});
    CHECK_THROWS_AS(Form::from_poly(px()) + Form::zero(other), Error);
    CHECK_THROWS_AS(Form::from_poly(px()).wedge(Form::unit(other)), Error);
}

TEST_CASE("json round-trips are bit-exact") {
    Poly f = px() * px() + py().scaled(Rational(-3, 2));
    std::string fs = to_json_string(f);
    Poly f2 = poly_from_json(fs, plane());
    CHECK(f2 == f);
    CHECK(to_json_string(f2) == fs);

    Form w = mono(f, {g({1}, 0), g({2, 3}, 1)}) + Form::from_poly(py());
    std::string ws = to_json_string(w);
    Form w2 = form_from_json(ws);
    CHECK(w2 == w);
    CHECK(to_json_string(w2) == ws);

    CovariantTensor t(plane(), 2);
    t.set_component({0, 1}, px());
    t.set_component({1, 1}, Poly::constant(plane(), Rational(5, 7)));
    std::string ts = to_json_string(t);
    CovariantTensor t2 = tensor_from_json(ts);
    CHECK(t2 == t);
    CHECK(to_json_string(t2) == ts);

    std::vector<VectorField> vfs = {VectorField(plane(), {py(), Poly(plane())}),
                                    VectorField::coordinate(plane(), 1)};
    std::string vs = to_json_string(vfs);
    std::vector<VectorField> vfs2 = vector_fields_from_json(vs);
    CHECK(vfs2 == vfs);
    CHECK(to_json_string(vfs2) == vs);
}

TEST_CASE("json rejects malformed input") {
    CHECK_THROWS_AS(form_from_json("not json"), Error);
    CHECK_THROWS_AS(form_from_json("{}"), Error);
    CHECK_THROWS_AS(tensor_from_json("[1,2,3]"), Error);
}
