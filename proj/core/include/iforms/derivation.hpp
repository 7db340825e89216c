#ifndef IFORMS_DERIVATION_HPP
#define IFORMS_DERIVATION_HPP

#include <functional>
#include <utility>

#include "iforms/form.hpp"

namespace iforms {

/// A graded derivation of Lambda_inf, determined by its multidegree together
/// with its action on coefficients and on generators. The extension to all
/// forms is the signed Leibniz rule
///     D(ab) = D(a) b + (-1)^{<deg D, deg a>} a D(b),
/// applied along the flattened generator sequence of each monomial.
class GradedDerivation {
public:
    using CoeffAction = std::function<Form(const Poly&)>;
    using GenAction = std::function<Form(const Generator&)>;

    GradedDerivation(MultiDegree degree, CoeffAction on_coeff, GenAction on_gen)
        : degree_(std::move(degree)), on_coeff_(std::move(on_coeff)), on_gen_(std::move(on_gen)) {}

    const MultiDegree& degree() const { return degree_; }
    Form on_coeff(const Poly& f) const { return on_coeff_(f); }
    Form on_generator(const Generator& g) const { return on_gen_(g); }

    /// Leibniz extension to an arbitrary (possibly inhomogeneous) form; the
    /// sign for each factor uses the exact degree of the monomial prefix.
    Form operator()(const Form& w) const;

private:
    MultiDegree degree_;
    CoeffAction on_coeff_;
    GenAction on_gen_;
};

/// [D1, D2] = D1 D2 - (-1)^{<deg D1, deg D2>} D2 D1, again a graded derivation.
GradedDerivation graded_commutator(const GradedDerivation& d1, const GradedDerivation& d2);

}  // namespace iforms

#endif
