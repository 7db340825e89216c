#include "iforms/poly.hpp"

#include <numeric>

#include "iforms/error.hpp"

namespace iforms {

bool GradedLex::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
}

Poly Poly::constant(Space space, Rational c) {
    Poly p(std::move(space));
    if (c != 0) p.terms_.emplace(std::vector<int>(p.space_.dim(), 0), std::move(c));
    return p;
}

Poly Poly::coordinate(const Space& space, std::size_t index) {
    if (index >= space.dim()) throw Error("coordinate index out of range");
    Poly p(space);
    std::vector<int> exps(space.dim(), 0);
    exps[index] = 1;
    p.terms_.emplace(std::move(exps), 1);
    return p;
}

Poly Poly::coordinate(const Space& space, std::string_view name) {
    return coordinate(space, space.require(name));
}

std::optional<Rational> Poly::as_constant() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() != 1) return std::nullopt;
    const auto& [exps, c] = *terms_.begin();
    for (int e : exps)
        if (e != 0) return std::nullopt;
    return c;
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    // graded-lex: the last term has maximal total degree
    const auto& exps = terms_.rbegin()->first;
    return std::accumulate(exps.begin(), exps.end(), 0);
}

void Poly::add_term(std::vector<int> exps, const Rational& c) {
    if (c == 0) return;
    if (exps.size() != space_.dim()) throw Error("exponent vector does not match space dimension");
    for (int e : exps)
        if (e < 0) throw Error("negative exponent");
    auto [it, inserted] = terms_.try_emplace(std::move(exps), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Poly::require_same_space(const Poly& o) const {
    if (space_ != o.space_) throw Error("polynomial space mismatch");
}

Poly Poly::operator+(const Poly& o) const {
    require_same_space(o);
    Poly r = *this;
    for (const auto& [exps, c] : o.terms_) r.add_term(exps, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const { return scaled(-1); }

Poly Poly::scaled(const Rational& c) const {
    Poly r(space_);
    if (c == 0) return r;
    for (const auto& [exps, v] : terms_) r.terms_.emplace(exps, v * c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    require_same_space(o);
    Poly r(space_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            std::vector<int> exps(ea.size());
            for (std::size_t i = 0; i < ea.size(); ++i) exps[i] = ea[i] + eb[i];
            r.add_term(std::move(exps), ca * cb);
        }
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r = one(space_);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

Poly Poly::partial(std::size_t index) const {
    if (index >= space_.dim()) throw Error("coordinate index out of range");
    Poly r(space_);
    for (const auto& [exps, c] : terms_) {
        if (exps[index] == 0) continue;
        std::vector<int> e = exps;
        e[index] -= 1;
        r.add_term(std::move(e), c * exps[index]);
    }
    return r;
}

Poly Poly::partial(std::string_view name) const { return partial(space_.require(name)); }

VectorField::VectorField(Space space, std::vector<Poly> components)
    : space_(std::move(space)), components_(std::move(components)) {
    if (components_.size() != space_.dim()) throw Error("vector field component count mismatch");
    for (const auto& c : components_)
        if (c.space() != space_) throw Error("vector field component over wrong space");
}

VectorField VectorField::zero(const Space& space) {
    return VectorField(space, std::vector<Poly>(space.dim(), Poly(space)));
}

VectorField VectorField::coordinate(const Space& space, std::size_t index) {
    std::vector<Poly> comps(space.dim(), Poly(space));
    comps.at(index) = Poly::one(space);
    return VectorField(space, std::move(comps));
}

Poly VectorField::apply(const Poly& f) const {
    if (f.space() != space_) throw Error("vector field / polynomial space mismatch");
    Poly r(space_);
    for (std::size_t mu = 0; mu < space_.dim(); ++mu) r = r + components_[mu] * f.partial(mu);
    return r;
}

VectorField VectorField::operator+(const VectorField& o) const {
    if (space_ != o.space_) throw Error("vector field space mismatch");
    std::vector<Poly> comps;
    comps.reserve(components_.size());
    for (std::size_t mu = 0; mu < components_.size(); ++mu)
        comps.push_back(components_[mu] + o.components_[mu]);
    return VectorField(space_, std::move(comps));
}

VectorField VectorField::scaled_by(const Poly& f) const {
    std::vector<Poly> comps;
    comps.reserve(components_.size());
    for (const auto& c : components_) comps.push_back(c * f);
    return VectorField(space_, std::move(comps));
}

VectorField bracket(const VectorField& x, const VectorField& y) {
    if (x.space() != y.space()) throw Error("vector field space mismatch");
    std::vector<Poly> comps;
    comps.reserve(x.space().dim());
    for (std::size_t mu = 0; mu < x.space().dim(); ++mu)
        comps.push_back(x.apply(y.component(mu)) - y.apply(x.component(mu)));
    return VectorField(x.space(), std::move(comps));
}

SmoothMap::SmoothMap(Space source, Space target, std::vector<Poly> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
    if (components_.size() != target_.dim()) throw Error("map component count must match target dimension");
    for (const auto& c : components_)
        if (c.space() != source_) throw Error("map components must live over the source space");
}

Poly substitute(const Poly& f, const SmoothMap& phi) {
    if (f.space() != phi.target()) throw Error("substitute: polynomial not over the map target");
    Poly r(phi.source());
    for (const auto& [exps, c] : f.terms()) {
        Poly term = Poly::constant(phi.source(), c);
        for (std::size_t a = 0; a < exps.size(); ++a)
            if (exps[a] > 0) term = term * phi.component(a).pow(static_cast<unsigned>(exps[a]));
        r = r + term;
    }
    return r;
}

SmoothMap compose(const SmoothMap& outer, const SmoothMap& inner) {
    if (inner.target() != outer.source()) throw Error("compose: map spaces do not chain");
    std::vector<Poly> comps;
    comps.reserve(outer.target().dim());
    for (std::size_t a = 0; a < outer.target().dim(); ++a)
        comps.push_back(substitute(outer.component(a), inner));
    return SmoothMap(inner.source(), outer.target(), std::move(comps));
}

}  // namespace iforms
