#include <doctest.h>

#include "iforms/error.hpp"
#include "iforms/grading.hpp"

namespace {
using namespace iforms;
}

TEST_CASE("multidegree arithmetic with cancellation") {
    MultiDegree e1 = MultiDegree::basis(1);
    MultiDegree e2 = MultiDegree::basis(2);
    CHECK((e1 + e2).at(1) == 1);
    CHECK((e1 + e2).at(3) == 0);
    CHECK((e1 - e1).is_zero());
    CHECK((e1 + e1) == e1.scaled(2));
    CHECK(-(e1 - e2) == e2 - e1);
    MultiDegree d = e1;
    d.add(1, -1);
    CHECK(d.is_zero());
    CHECK(d.entries().empty());
    CHECK_THROWS_AS(MultiDegree::basis(0), Error);
}

TEST_CASE("parity pairing") {
    MultiDegree e1 = MultiDegree::basis(1);
    MultiDegree e2 = MultiDegree::basis(2);
    CHECK(parity_pairing(e1, e1) == 1);
    CHECK(parity_pairing(e1, e2) == 0);
    CHECK(parity_pairing(e1 + e2, e1) == 1);
    CHECK(parity_pairing(e1 + e2, e1 + e2) == 0);
    // negative entries still land in {0,1}
    CHECK(parity_pairing(e1 - e2, e2) == 1);
    CHECK(parity_pairing(e1 - e2, e1 + e2) == 0);
    // symmetry
    CHECK(parity_pairing(e1 + e2, e2) == parity_pairing(e2, e1 + e2));
}

TEST_CASE("index sets sort, dedup, and validate") {
    CHECK(IndexSet({3, 1, 2}) == IndexSet({1, 2, 3}));
    CHECK(IndexSet({2, 2, 1}) == IndexSet({1, 2}));
    CHECK(IndexSet{1, 2}.contains(2));
    CHECK(!IndexSet{1, 2}.contains(3));
    CHECK(IndexSet{1, 3}.with(2) == IndexSet({1, 2, 3}));
    CHECK(IndexSet{1, 2, 3}.without(2) == IndexSet({1, 3}));
    CHECK(IndexSet{1, 4}.max() == 4);
    CHECK(IndexSet().max() == 0);
    CHECK_THROWS_AS(IndexSet({0, 1}), Error);
    // pairing of indicator degrees counts the intersection mod 2
    auto dK = degree_of_indexset(IndexSet{1, 2});
    auto dL = degree_of_indexset(IndexSet{2, 3});
    CHECK(parity_pairing(dK, dL) == 1);
    CHECK(parity_pairing(dK, degree_of_indexset(IndexSet{3, 4})) == 0);
}

TEST_CASE("koszul sign") {
    MultiDegree e1 = MultiDegree::basis(1);
    MultiDegree e2 = MultiDegree::basis(2);
    // swapping two odd factors in the same slot flips the sign
    CHECK(koszul_sign({e1, e1}, {1, 0}) == -1);
    CHECK(koszul_sign({e1, e2}, {1, 0}) == 1);
    CHECK(koszul_sign({e1, e1, e1}, {2, 1, 0}) == -1);  // three inversions
    CHECK(koszul_sign({e1, e1}, {0, 1}) == 1);
    // even factors never contribute
    CHECK(koszul_sign({e1 + e2, e1 + e2}, {1, 0}) == 1);
    CHECK_THROWS_AS(koszul_sign({e1}, {0, 1}), Error);
}
