#include <doctest.h>

#include "iforms/calculus.hpp"
#include "iforms/error.hpp"
#include "iforms/render.hpp"

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

TEST_CASE("first differential of a polynomial") {
    CHECK(d(1, Form::from_poly(px() * px())) == mono(px().scaled(2), {g({1}, 0)}));
    CHECK(d(2, Form::from_poly(px() * py())) ==
          mono(py(), {g({2}, 0)}) + mono(px(), {g({2}, 1)}));
    CHECK(d(1, Form::from_poly(one())).is_zero());
    CHECK(d(3, Form::from_generator(plane(), g({1}, 0))) == mono(one(), {g({1, 3}, 0)}));
}

TEST_CASE("second differential of x^2") {
    Form w = d(1, d(2, Form::from_poly(px() * px())));
    Form expected = mono(px().scaled(2), {g({1, 2}, 0)}) +
                    mono(Poly::constant(plane(), 2), {g({1}, 0), g({2}, 0)});
    CHECK(w == expected);
    CHECK(to_text(w) == "2*d1(x) ∧ d2(x) + 2*x*d{1,2}(x)");
    CHECK(to_latex(w) == "2\\,d_{1}x\\wedge d_{2}x + 2x\\,d_{12}x");
}

TEST_CASE("d_k is square-zero and the slots commute") {
    Form w = mono(px(), {g({1}, 0), g({2, 3}, 1)}) + Form::from_poly(px() * py() * py());
    for (int k = 1; k <= 4; ++k) CHECK(d(k, d(k, w)).is_zero());
    CHECK(d(1, d(2, w)) == d(2, d(1, w)));
    CHECK(graded_commutator(exterior_d(plane(), 1), exterior_d(plane(), 3))(w).is_zero());
}

TEST_CASE("Leibniz rule of the differential") {
    Form a = mono(px(), {g({1}, 0)});  // odd in slot 1
    Form b = mono(py(), {g({2}, 1)});
    // d_1(a ^ b) = d_1 a ^ b + (-1)^<e1, deg a> a ^ d_1 b, with <e1, e1> = 1
    CHECK(d(1, a.wedge(b)) == d(1, a).wedge(b) - a.wedge(d(1, b)));
    // slot 2 passes over a without a sign: <e2, e1> = 0
    CHECK(d(2, a.wedge(b)) == d(2, a).wedge(b) + a.wedge(d(2, b)));
}

TEST_CASE("partition formula on xy") {
    Poly f = px() * py();
    Form expected = mono(py(), {g({1, 2}, 0)}) + mono(px(), {g({1, 2}, 1)}) +
                    mono(one(), {g({1}, 0), g({2}, 1)}) + mono(one(), {g({1}, 1), g({2}, 0)});
    CHECK(d_partition(IndexSet{1, 2}, f) == expected);
    CHECK(d_iterated(IndexSet{1, 2}, f) == expected);
}

TEST_CASE("partition formula matches the iterated route") {
    Poly f = px() * px() * py() + py().scaled(Rational(1, 3));
    for (const IndexSet& K :
         {IndexSet{1}, IndexSet{2}, IndexSet{1, 2}, IndexSet{1, 3}, IndexSet{1, 2, 3},
          IndexSet{2, 3, 4}})
        CHECK(d_partition(K, f) == d_iterated(K, f));
    CHECK_THROWS_AS(d_partition(IndexSet{}, f), Error);
    // empty K is the identity on the iterated route
    CHECK(d_iterated(IndexSet{}, f) == Form::from_poly(f));
}

TEST_CASE("slot maps") {
    SlotMap t = SlotMap::transposition(1, 2);
    CHECK(t(1) == 2);
    CHECK(t(2) == 1);
    CHECK(t(3) == 3);
    SlotMap c = SlotMap::from_cycles({{1, 2, 3}});
    CHECK(c(1) == 2);
    CHECK(c(3) == 1);
    CHECK(c(IndexSet{1, 3}) == IndexSet({1, 2}));
    SlotMap p = SlotMap::from_permutation({2, 3, 1});
    CHECK(p(1) == 2);
    CHECK(p(3) == 1);
    CHECK(SlotMap::shift_up(2)(1) == 3);
    CHECK(SlotMap::shift_down_above(2)(3) == 2);
    CHECK(SlotMap::shift_down_above(2)(1) == 1);
    CHECK_THROWS_AS(SlotMap::shift_down_above(2)(2), Error);
    CHECK(t.then(c)(1) == 3);  // c(t(1)) = c(2) = 3
    // collapsing maps are rejected on index sets
    SlotMap collapse = SlotMap::from_cycles({{1, 2}}).then(SlotMap::transposition(2, 3));
    CHECK_THROWS_AS(SlotMap::from_cycles({{1, 2}, {2, 3}}), Error);
    CHECK(collapse(IndexSet{1}) == IndexSet{3});
}

TEST_CASE("kappa relabels slots without signs") {
    SlotMap t = SlotMap::transposition(1, 2);
    CHECK(kappa(t, mono(one(), {g({1}, 0), g({2}, 1)})) == mono(one(), {g({1}, 1), g({2}, 0)}));
    // the second differential of a function is symmetric under the swap
    Form h = d_iterated(IndexSet{1, 2}, px() * px());
    CHECK(kappa(t, h) == h);
    CHECK(kappa(SlotMap::shift_up(1), mono(px(), {g({1}, 0)})) == mono(px(), {g({2}, 0)}));
    // coefficients are untouched
    CHECK(kappa(t, Form::from_poly(px())) == Form::from_poly(px()));
}

TEST_CASE("lie derivative") {
    VectorField X(plane(), {py(), Poly(plane())});  // y d/dx
    CHECK(lie(X, Form::from_poly(px() * px())) == Form::from_poly((px() * py()).scaled(2)));
    CHECK(lie(X, Form::from_generator(plane(), g({1}, 0))) ==
          Form::from_generator(plane(), g({1}, 1)));
    CHECK(lie(X, Form::from_generator(plane(), g({1}, 1))).is_zero());
    // L_X commutes with d_k
    Form w = mono(px(), {g({1}, 0), g({2}, 1)});
    CHECK(lie(X, d(2, w)) == d(2, lie(X, w)));
    CHECK_THROWS_AS(lie(VectorField::zero(Space({"u"})), w), Error);
}

TEST_CASE("insertion operator") {
    VectorField X(plane(), {py(), Poly(plane())});  // y d/dx
    CHECK(insert(X, 1, Form::from_generator(plane(), g({1, 2}, 0))) ==
          Form::from_generator(plane(), g({2}, 1)));
    CHECK(insert(X, 1, Form::from_generator(plane(), g({1}, 0))) == Form::from_poly(py()));
    CHECK(insert(X, 2, Form::from_generator(plane(), g({1}, 0))).is_zero());
    CHECK(insert(X, 1, Form::from_poly(px())).is_zero());
    // signed Leibniz across an odd first factor
    Form a = Form::from_generator(plane(), g({1}, 0));
    Form b = Form::from_generator(plane(), g({1}, 1));
    CHECK(insert(X, 1, a.wedge(b)) ==
          insert(X, 1, a).wedge(b) - a.wedge(insert(X, 1, b)));
    CHECK_THROWS_AS(insertion(X, 0), Error);
}

TEST_CASE("canonical contraction i_C") {
    CHECK(insertion_c(Form::from_generator(plane(), g({1, 2}, 0))) ==
          Form::from_generator(plane(), g({1}, 0)));
    CHECK(insertion_c(Form::from_generator(plane(), g({2}, 0))).is_zero());
    CHECK(insertion_c(Form::from_poly(px())).is_zero());
    CHECK(insertion_c(mono(px(), {g({1, 2}, 1)})) == mono(px(), {g({1}, 1)}));
    // both factors map to zero, so the whole monomial dies
    CHECK(insertion_c(mono(one(), {g({1}, 0), g({2}, 0)})).is_zero());
    // [i_C, d_2] acts as the slot-1 degree on this form
    Form w = mono(one(), {g({1}, 0), g({2}, 0)});
    Form commutator =
        graded_commutator(insertion_c(plane()), exterior_d(plane(), 2))(w);
    CHECK(commutator == w);
}

TEST_CASE("homotopy operator H2") {
    CHECK(homotopy_h2(mono(px(), {g({1, 2}, 0)})) == mono(px(), {g({1}, 0)}));
    CHECK(homotopy_h2(Form::from_generator(plane(), g({2}, 0))).is_zero());
    CHECK(homotopy_h2(mono(one(), {g({1}, 0), g({2}, 0)})).is_zero());
    // slot-1 degree 2 component picks up the factor 1/2; i_C passes the odd
    // d_1 x factor without a sign since <-e2, e1> = 0
    Form w = mono(one(), {g({1}, 0), g({1, 2}, 1)});
    Form hw = homotopy_h2(w);
    CHECK(hw == mono(one(), {g({1}, 0), g({1}, 1)}).scaled(Rational(1, 2)));
    // homotopy identity on a mixed form
    Form mixed = w + Form::from_poly(px()) + mono(py(), {g({2}, 0)});
    CHECK(homotopy_h2(d(2, mixed)) + d(2, homotopy_h2(mixed)) ==
          mixed - include_lambda01(project_lambda01(mixed)));
    CHECK_THROWS_AS(homotopy_h2(Form::from_generator(plane(), g({3}, 0))), Error);
}

TEST_CASE("projection to slot-1 degree zero") {
    Form w = mono(px(), {g({1}, 0)}) + mono(py(), {g({2}, 0)}) + Form::from_poly(one());
    CHECK(project_lambda01(w) == mono(py(), {g({2}, 0)}) + Form::from_poly(one()));
    CHECK(include_lambda01(project_lambda01(w)) == project_lambda01(w));
    CHECK_THROWS_AS(include_lambda01(mono(px(), {g({1}, 0)})), Error);
    CHECK(lambda01_to_lambda1(mono(py(), {g({2}, 0), g({2}, 1)})) ==
          mono(py(), {g({1}, 0), g({1}, 1)}));
    CHECK_THROWS_AS(lambda01_to_lambda1(mono(px(), {g({1}, 0)})), Error);
    CHECK_THROWS_AS(project_lambda01(Form::from_generator(plane(), g({3}, 0))), Error);
}

TEST_CASE("pullback") {
    Space src({"u", "v"});
    Poly u = Poly::coordinate(src, "u"), v = Poly::coordinate(src, "v");
    SmoothMap phi(src, plane(), {u * u, u * v});  // x = u^2, y = uv
    Generator du1{IndexSet{1}, 0};
    CHECK(pullback(phi, Form::from_poly(py())) == Form::from_poly(u * v));
    CHECK(pullback(phi, Form::from_generator(plane(), g({1}, 0))) ==
          Form::monomial(u.scaled(2), {du1}));
    CHECK(pullback(phi, Form::from_generator(plane(), g({1, 2}, 0))) ==
          d_iterated(IndexSet{1, 2}, u * u));
    // commutes with the differential
    Form w = mono(px(), {g({1}, 1)});
    CHECK(pullback(phi, d(2, w)) == d(2, pullback(phi, w)));
    // algebra homomorphism
    Form a = Form::from_generator(plane(), g({1}, 0));
    Form b = mono(py(), {g({2}, 1)});
    CHECK(pullback(phi, a.wedge(b)) == pullback(phi, a).wedge(pullback(phi, b)));
    CHECK_THROWS_AS(pullback(phi, Form::from_poly(u)), Error);
}

TEST_CASE("graded commutator degree bookkeeping") {
    VectorField X(plane(), {py(), Poly(plane())});
    // i_X^(1) and d_1 pair oddly, so [i_X, d_1] = i_X d_1 + d_1 i_X = L_X on Lambda_1
    Form w = mono(px(), {g({1}, 0), g({1}, 1)});
    Form lhs = graded_commutator(insertion(X, 1), exterior_d(plane(), 1))(w);
    CHECK(lhs == lie(X, w));
}
