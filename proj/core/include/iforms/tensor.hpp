#ifndef IFORMS_TENSOR_HPP
#define IFORMS_TENSOR_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "iforms/calculus.hpp"
#include "iforms/form.hpp"

namespace iforms {

/// Classical covariant p-tensor: a sparse component map (mu_1..mu_p) -> Poly.
/// Order 0 is a single polynomial (the empty index tuple).
class CovariantTensor {
public:
    using IndexTuple = std::vector<std::size_t>;
    using ComponentMap = std::map<IndexTuple, Poly>;

    CovariantTensor(Space space, std::size_t order);
    static CovariantTensor scalar(Poly f);

    const Space& space() const { return space_; }
    std::size_t order() const { return order_; }
    const ComponentMap& components() const { return components_; }
    bool is_zero() const { return components_.empty(); }

    Poly component(const IndexTuple& idx) const;  // zero when absent
    void set_component(IndexTuple idx, Poly value);

    friend bool operator==(const CovariantTensor&, const CovariantTensor&) = default;

private:
    Space space_;
    std::size_t order_;
    ComponentMap components_;  // nonzero entries only
};

/// iota_p: T -> sum T_{mu_1..mu_p} d_1 x^{mu_1} ^ ... ^ d_p x^{mu_p};
/// homogeneous of multidegree (1,...,1) in slots 1..p, and injective.
Form embed(const CovariantTensor& t);

struct TensorCheck {
    std::optional<CovariantTensor> tensor;  // set iff the form is in im iota_p
    Form obstruction;  // sum of monomials containing a generator with |K| >= 2
};

/// Decides membership in im iota_p for a form of multidegree (1,...,1) in
/// slots 1..p; the obstruction returned on rejection is exactly what breaks
/// A-multilinearity of the evaluation map.
TensorCheck is_tensor(const Form& w, std::size_t p);

/// is_tensor that throws on rejection.
CovariantTensor extract(const Form& w, std::size_t p);

/// Insertion-route evaluation: (i_{X_p}^{(p)} o ... o i_{X_1}^{(1)})(w),
/// which must land in the coefficient algebra.
Poly evaluate_insertion(const Form& w, const std::vector<VectorField>& fields);

/// Classical contraction sum T_{mu} X_1^{mu_1} ... X_p^{mu_p} (the oracle).
Poly evaluate_components(const CovariantTensor& t, const std::vector<VectorField>& fields);

/// Insertion of X into the l-th place: i_X^{(l)} followed by the slot shift
/// that renumbers slots l+1..p down by one.
Form insert_slot(const Form& w, const VectorField& x, int slot, std::size_t p);

/// Argument permutation, with the convention fixed by the normative identity
/// embed(permute(sigma, T)) = kappa(sigma)(embed(T)):
/// permute(sigma, T)_{nu_1..nu_p} = T_{nu_sigma(1)..nu_sigma(p)}.
/// sigma is given 1-based as sigma[i-1] = sigma(i).
CovariantTensor permute(const std::vector<std::size_t>& sigma, const CovariantTensor& t);

CovariantTensor tensor_product(const CovariantTensor& t1, const CovariantTensor& t2);

/// Classical Lie derivative of a covariant tensor, componentwise; satisfies
/// embed(lie_tensor(X, T)) = lie(X, embed(T)).
CovariantTensor lie_tensor(const VectorField& x, const CovariantTensor& t);

}  // namespace iforms

#endif
