#ifndef IFORMS_POLY_HPP
#define IFORMS_POLY_HPP

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "iforms/rational.hpp"
#include "iforms/space.hpp"

namespace iforms {

/// Graded-lexicographic order on exponent vectors: total degree first, then lex.
struct GradedLex {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients over a Space.
/// The polynomial ring models the coefficient algebra A = C^inf(M).
class Poly {
public:
    using TermMap = std::map<std::vector<int>, Rational, GradedLex>;

    explicit Poly(Space space) : space_(std::move(space)) {}
    static Poly constant(Space space, Rational c);
    static Poly one(Space space) { return constant(std::move(space), 1); }
    static Poly coordinate(const Space& space, std::size_t index);
    static Poly coordinate(const Space& space, std::string_view name);

    const Space& space() const { return space_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::optional<Rational> as_constant() const;
    int total_degree() const;  // -1 for the zero polynomial

    /// Adds c * x^exps, dropping the term if the coefficient cancels to zero.
    void add_term(std::vector<int> exps, const Rational& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const Rational& c) const;
    Poly pow(unsigned e) const;

    /// Formal partial derivative with respect to the given coordinate.
    Poly partial(std::size_t index) const;
    Poly partial(std::string_view name) const;

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void require_same_space(const Poly& o) const;

    Space space_;
    TermMap terms_;
};

/// A derivation of the coordinate algebra with polynomial components X^mu.
class VectorField {
public:
    VectorField(Space space, std::vector<Poly> components);
    static VectorField zero(const Space& space);
    /// The coordinate field d/dx^index.
    static VectorField coordinate(const Space& space, std::size_t index);

    const Space& space() const { return space_; }
    const Poly& component(std::size_t mu) const { return components_.at(mu); }
    const std::vector<Poly>& components() const { return components_; }

    /// X(f) = sum_mu X^mu df/dx^mu.
    Poly apply(const Poly& f) const;

    VectorField operator+(const VectorField& o) const;
    VectorField scaled_by(const Poly& f) const;

    friend bool operator==(const VectorField&, const VectorField&) = default;

private:
    Space space_;
    std::vector<Poly> components_;
};

/// Commutator of vector fields, [X,Y]^mu = X(Y^mu) - Y(X^mu).
VectorField bracket(const VectorField& x, const VectorField& y);

/// A polynomial map phi: source -> target, one source-space component per
/// target coordinate.
class SmoothMap {
public:
    SmoothMap(Space source, Space target, std::vector<Poly> components);

    const Space& source() const { return source_; }
    const Space& target() const { return target_; }
    const Poly& component(std::size_t alpha) const { return components_.at(alpha); }

private:
    Space source_;
    Space target_;
    std::vector<Poly> components_;
};

/// Pullback on coefficients: f over phi.target composed with phi.
Poly substitute(const Poly& f, const SmoothMap& phi);

/// (outer . inner): inner: M -> N, outer: N -> P gives M -> P.
SmoothMap compose(const SmoothMap& outer, const SmoothMap& inner);

}  // namespace iforms

#endif
