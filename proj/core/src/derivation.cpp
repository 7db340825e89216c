#include "iforms/derivation.hpp"

namespace iforms {

Form GradedDerivation::operator()(const Form& w) const {
    Form out(w.space());
    const Poly unit = Poly::one(w.space());
    for (const auto& [factors, coeff] : w.terms()) {
        // Coefficient factor first (coefficients have degree zero, so no sign).
        Form head = on_coeff_(coeff);
        if (!head.is_zero()) {
            if (!factors.empty()) head = head.wedge(Form::monomial(unit, Form::flatten(factors)));
            out += head;
        }
        // Then each generator in turn, with the prefix sign.
        std::vector<Generator> flat = Form::flatten(factors);
        MultiDegree prefix;
        for (std::size_t i = 0; i < flat.size(); ++i) {
            Form dg = on_gen_(flat[i]);
            if (!dg.is_zero()) {
                int sign = parity_pairing(degree_, prefix) ? -1 : 1;
                Poly c = sign < 0 ? -coeff : coeff;
                Form term = Form::monomial(std::move(c),
                                           std::vector<Generator>(flat.begin(), flat.begin() + i));
                term = term.wedge(dg);
                if (i + 1 < flat.size())
                    term = term.wedge(Form::monomial(
                        unit, std::vector<Generator>(flat.begin() + i + 1, flat.end())));
                out += term;
            }
            prefix += flat[i].degree();
        }
    }
    return out;
}

GradedDerivation graded_commutator(const GradedDerivation& d1, const GradedDerivation& d2) {
    const int parity = parity_pairing(d1.degree(), d2.degree());
    auto combine = [d1, d2, parity](Form first, Form second) {
        Form a = d1(first);
        Form b = d2(second);
        return parity ? a + b : a - b;
    };
    return GradedDerivation(
        d1.degree() + d2.degree(),
        [d1, d2, combine](const Poly& f) { return combine(d2.on_coeff(f), d1.on_coeff(f)); },
        [d1, d2, combine](const Generator& g) {
            return combine(d2.on_generator(g), d1.on_generator(g));
        });
}

}  // namespace iforms
