#ifndef IFORMS_FORM_HPP
#define IFORMS_FORM_HPP

#include <compare>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "iforms/grading.hpp"
#include "iforms/poly.hpp"

namespace iforms {

/// An atom d_K x^mu of the iterated-forms algebra: a nonempty slot set plus a
/// coordinate index. Parity is |K| mod 2, multidegree is e_K.
struct Generator {
    IndexSet slots;
    std::size_t coord = 0;

    int parity() const { return static_cast<int>(slots.size() % 2); }
    MultiDegree degree() const { return degree_of_indexset(slots); }

    friend bool operator==(const Generator&, const Generator&) = default;
    // Canonical order: slot set as a sorted sequence, lexicographically, then
    // the coordinate index.
    friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// Element of Lambda_inf in normal form: a finite sum of monomials, each a
/// polynomial coefficient times a strictly increasing product of generators.
/// Odd-parity generators never carry an exponent above 1 (their square is
/// zero); normal form is maintained eagerly on every construction, so equality
/// is structural equality.
class Form {
public:
    using FactorList = std::vector<std::pair<Generator, int>>;
    using TermMap = std::map<FactorList, Poly>;

    explicit Form(Space space) : space_(std::move(space)) {}
    static Form zero(Space space) { return Form(std::move(space)); }
    static Form unit(const Space& space);
    static Form from_poly(Poly coeff);
    static Form from_generator(const Space& space, Generator g);
    /// coeff times an arbitrary (unordered, possibly repeating) generator
    /// sequence; normalized on construction.
    static Form monomial(Poly coeff, std::vector<Generator> gens);

    const Space& space() const { return space_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// The coefficient when the form lies in Lambda_0, otherwise nullopt.
    std::optional<Poly> as_coefficient() const;

    /// Sorts the sequence with the Koszul sign, drops odd squares, merges the
    /// resulting monomial into the term map.
    void add_raw(const Poly& coeff, std::vector<Generator> gens);

    Form operator+(const Form& o) const;
    Form operator-(const Form& o) const;
    Form operator-() const;
    Form& operator+=(const Form& o);
    Form scaled(const Rational& c) const;
    Form scaled(const Poly& f) const;
    Form wedge(const Form& o) const;

    /// Splits into homogeneous pieces; the values sum back to the input.
    std::map<MultiDegree, Form> multidegree_components() const;
    /// Largest differential slot occurring; 0 for pure coefficients.
    int max_slot() const;

    static MultiDegree factor_degree(const FactorList& factors);
    static std::vector<Generator> flatten(const FactorList& factors);

    friend bool operator==(const Form&, const Form&) = default;

private:
    void require_same_space(const Form& o) const;

    Space space_;
    TermMap terms_;
};

}  // namespace iforms

#endif
