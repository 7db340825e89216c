#include "iforms/form.hpp"

#include <algorithm>
#include <utility>

#include "iforms/error.hpp"

namespace iforms {

Form Form::unit(const Space& space) { return from_poly(Poly::one(space)); }

Form Form::from_poly(Poly coeff) {
    Form w(coeff.space());
    if (!coeff.is_zero()) w.terms_.emplace(FactorList{}, std::move(coeff));
    return w;
}

Form Form::from_generator(const Space& space, Generator g) {
    return monomial(Poly::one(space), {std::move(g)});
}

Form Form::monomial(Poly coeff, std::vector<Generator> gens) {
    Form w(coeff.space());
    w.add_raw(coeff, std::move(gens));
    return w;
}

void Form::add_raw(const Poly& coeff, std::vector<Generator> gens) {
    if (coeff.is_zero()) return;
    for (const auto& g : gens) {
        if (g.slots.empty()) throw Error("generator slot set must be nonempty");
        if (g.coord >= space_.dim()) throw Error("generator coordinate out of range");
    }
    // Insertion sort into canonical order, accumulating the Koszul sign.
    int sign = 1;
    for (std::size_t i = 1; i < gens.size(); ++i)
        for (std::size_t j = i; j > 0 && gens[j] < gens[j - 1]; --j) {
            if (parity_pairing(gens[j].degree(), gens[j - 1].degree())) sign = -sign;
            std::swap(gens[j], gens[j - 1]);
        }
    FactorList factors;
    for (auto& g : gens) {
        if (!factors.empty() && factors.back().first == g) {
            if (g.parity() == 1) return;  // odd square is zero
            ++factors.back().second;
        } else {
            factors.emplace_back(std::move(g), 1);
        }
    }
    Poly c = sign < 0 ? -coeff : coeff;
    auto [it, inserted] = terms_.try_emplace(std::move(factors), std::move(c));
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::optional<Poly> Form::as_coefficient() const {
    if (terms_.empty()) return Poly(space_);
    if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
    return std::nullopt;
}

void Form::require_same_space(const Form& o) const {
    if (space_ != o.space_) throw Error("form space mismatch");
}

Form Form::operator+(const Form& o) const {
    Form r = *this;
    r += o;
    return r;
}

Form& Form::operator+=(const Form& o) {
    require_same_space(o);
    for (const auto& [factors, coeff] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(factors, coeff);
        if (!inserted) {
            it->second = it->second + coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

Form Form::operator-(const Form& o) const { return *this + (-o); }

Form Form::operator-() const { return scaled(Rational(-1)); }

Form Form::scaled(const Rational& c) const {
    Form r(space_);
    if (c == 0) return r;
    for (const auto& [factors, coeff] : terms_) r.terms_.emplace(factors, coeff.scaled(c));
    return r;
}

Form Form::scaled(const Poly& f) const { return wedge(from_poly(f)); }

std::vector<Generator> Form::flatten(const FactorList& factors) {
    std::vector<Generator> flat;
    for (const auto& [g, e] : factors)
        for (int i = 0; i < e; ++i) flat.push_back(g);
    return flat;
}

Form Form::wedge(const Form& o) const {
    require_same_space(o);
    Form r(space_);
    for (const auto& [fa, ca] : terms_)
        for (const auto& [fb, cb] : o.terms_) {
            std::vector<Generator> flat = flatten(fa);
            std::vector<Generator> tail = flatten(fb);
            flat.insert(flat.end(), tail.begin(), tail.end());
            r.add_raw(ca * cb, std::move(flat));
        }
    return r;
}

MultiDegree Form::factor_degree(const FactorList& factors) {
    MultiDegree d;
    for (const auto& [g, e] : factors) d += g.degree().scaled(e);
    return d;
}

std::map<MultiDegree, Form> Form::multidegree_components() const {
    std::map<MultiDegree, Form> pieces;
    for (const auto& [factors, coeff] : terms_) {
        auto [it, inserted] = pieces.try_emplace(factor_degree(factors), space_);
        it->second.terms_.emplace(factors, coeff);
    }
    return pieces;
}

int Form::max_slot() const {
    int m = 0;
    for (const auto& [factors, coeff] : terms_)
        for (const auto& [g, e] : factors) m = std::max(m, g.slots.max());
    return m;
}

}  // namespace iforms
