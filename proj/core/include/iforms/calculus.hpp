#ifndef IFORMS_CALCULUS_HPP
#define IFORMS_CALCULUS_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "iforms/derivation.hpp"
#include "iforms/form.hpp"

namespace iforms {

/// k-th iterated exterior differential as a first-class derivation of degree
/// e_k: coefficients go to sum_mu (df/dx^mu) d_k x^mu, a generator d_K x^mu
/// goes to d_{K u {k}} x^mu when k is fresh and to zero otherwise.
GradedDerivation exterior_d(const Space& space, int slot);

Form d(int slot, const Form& w);

/// d_K f = d_{k1} ... d_{kr} f; application order over K is immaterial
/// (tested, not assumed). K may be empty (identity).
Form d_iterated(const IndexSet& K, const Poly& f);
Form d_iterated(const IndexSet& K, const Form& w);

/// The closed partition formula for d_K f: the sum over unordered set
/// partitions {J_1,...,J_l} of K (blocks ordered by least element) and all
/// coordinate tuples of the mixed partial times d_{J_1}x^{mu_1} ^ ... .
/// Kept as an independent route; must agree with d_iterated exactly.
Form d_partition(const IndexSet& K, const Poly& f);

/// Finite description of a slot relabeling: a bijection of N with finite
/// support, or an injection such as k -> k+p. Identity off the stored map.
class SlotMap {
public:
    SlotMap() = default;  // identity

    static SlotMap transposition(int i, int j);
    /// Product of cycles, applied as a single permutation.
    static SlotMap from_cycles(const std::vector<std::vector<int>>& cycles);
    /// Permutation of {1..p} given as images: slot i -> image_of[i-1].
    static SlotMap from_permutation(const std::vector<int>& image_of);
    /// Injection k -> k + amount (amount >= 0).
    static SlotMap shift_up(int amount);
    /// k -> k - 1 for k > removed, identity otherwise (used after removing a slot).
    static SlotMap shift_down_above(int removed);

    int operator()(int slot) const;
    IndexSet operator()(const IndexSet& K) const;

    /// (a.then(b))(k) = b(a(k)).
    SlotMap then(const SlotMap& next) const;

private:
    std::function<int(int)> fn_;  // empty = identity
};

/// Coefficient-fixing algebra automorphism d_K x^mu -> d_{sigma(K)} x^mu.
/// Sign-free because |sigma K ∩ sigma L| = |K ∩ L| for injective sigma.
Form kappa(const SlotMap& sigma, const Form& w);

/// Lie derivative along X: the unique degree-0 derivation with f -> X(f) and
/// d_K x^mu -> d_K(X^mu); commutes with every d_k.
GradedDerivation lie_derivation(const VectorField& x);
Form lie(const VectorField& x, const Form& w);

/// Insertion i_X^{(l)}: degree -e_l; kills coefficients, and
/// d_K x^mu -> d_{K \ {l}}(X^mu) when l in K, zero otherwise.
GradedDerivation insertion(const VectorField& x, int slot);
Form insert(const VectorField& x, int slot, const Form& w);

/// i_C^{(2)}: the degree -e2 derivation with d_{12}x -> d_1 x and all other
/// generators (and coefficients) -> 0. [i_C, d_2] multiplies each monomial by
/// its slot-1 degree.
GradedDerivation insertion_c(const Space& space);
/// Same, with the Lambda_2 restriction (max_slot <= 2) enforced.
Form insertion_c(const Form& w);

/// Homotopy operator H2 on Lambda_2: (1/s) i_C^{(2)} on each component of
/// slot-1 degree s != 0, zero on s = 0 components.
Form homotopy_h2(const Form& w);

/// pi: keeps exactly the monomials of slot-1 degree zero (Lambda_2^{(0,*)}).
Form project_lambda01(const Form& w);
/// iota: identity inclusion of Lambda_2^{(0,*)} into Lambda_2.
Form include_lambda01(const Form& w);

/// The natural isomorphism (Lambda_2^{(0,*)}, d_2) -> (Lambda, d_1): relabel
/// slot 2 to slot 1. Errors if any monomial has nonzero slot-1 degree.
Form lambda01_to_lambda1(const Form& w);

/// Pullback along phi: algebra homomorphism with coefficients via substitute
/// and d_K y^alpha -> d_K(phi^alpha); commutes with every d_k.
Form pullback(const SmoothMap& phi, const Form& w);

}  // namespace iforms

#endif
