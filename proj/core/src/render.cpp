#include "iforms/render.hpp"

#include <sstream>

namespace iforms {

namespace {

std::string rational_text(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

// One polynomial term as "3/2*x^2*y", sign stripped; returns the sign.
std::string poly_term_text(const Space& space, const std::vector<int>& exps, const Rational& c,
                           int& sign) {
    Rational mag = c < 0 ? Rational(-c) : c;
    sign = c < 0 ? -1 : 1;
    std::vector<std::string> parts;
    bool has_vars = false;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        has_vars = true;
        if (exps[i] == 1)
            parts.push_back(space.coord(i));
        else
            parts.push_back(space.coord(i) + "^" + std::to_string(exps[i]));
    }
    if (!has_vars || mag != 1) parts.insert(parts.begin(), rational_text(mag));
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "*";
        out += parts[i];
    }
    return out;
}

std::string join_signed(const std::vector<std::pair<int, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& [sign, text] = terms[i];
        if (i == 0)
            out += (sign < 0 ? "-" : "") + text;
        else
            out += (sign < 0 ? " - " : " + ") + text;
    }
    return out;
}

std::string generator_text(const Space& space, const Generator& g, int exp) {
    std::string s = "d";
    if (g.slots.size() == 1) {
        s += std::to_string(g.slots.elements().front());
    } else {
        s += "{";
        for (std::size_t i = 0; i < g.slots.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(g.slots.elements()[i]);
        }
        s += "}";
    }
    s += "(" + space.coord(g.coord) + ")";
    if (exp > 1) s += "^" + std::to_string(exp);
    return s;
}

}  // namespace

std::string to_text(const Poly& f) {
    std::vector<std::pair<int, std::string>> terms;
    // descending total degree reads more naturally
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        int sign = 1;
        std::string t = poly_term_text(f.space(), it->first, it->second, sign);
        terms.emplace_back(sign, std::move(t));
    }
    return join_signed(terms);
}

std::string to_text(const Form& w) {
    std::vector<std::pair<int, std::string>> terms;
    for (const auto& [factors, coeff] : w.terms()) {
        if (factors.empty()) {
            // bare coefficient: splice its own signed terms into the sum
            for (auto it = coeff.terms().rbegin(); it != coeff.terms().rend(); ++it) {
                int sign = 1;
                std::string t = poly_term_text(w.space(), it->first, it->second, sign);
                terms.emplace_back(sign, std::move(t));
            }
            continue;
        }
        std::string gens;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) gens += " ∧ ";
            gens += generator_text(w.space(), factors[i].first, factors[i].second);
        }
        int sign = 1;
        std::string prefix;
        if (coeff.terms().size() == 1) {
            const auto& [exps, c] = *coeff.terms().begin();
            std::string t = poly_term_text(w.space(), exps, c, sign);
            if (t != "1") prefix = t + "*";
        } else {
            prefix = "(" + to_text(coeff) + ")*";
        }
        terms.emplace_back(sign, prefix + gens);
    }
    return join_signed(terms);
}

std::string to_text(const CovariantTensor& t) {
    if (t.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [idx, value] : t.components()) {
        if (!first) out << "\n";
        first = false;
        out << "(";
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (i) out << ",";
            out << t.space().coord(idx[i]);
        }
        out << "): " << to_text(value);
    }
    return out.str();
}

namespace {

std::string poly_term_latex(const Space& space, const std::vector<int>& exps, const Rational& c,
                            int& sign) {
    Rational mag = c < 0 ? Rational(-c) : c;
    sign = c < 0 ? -1 : 1;
    std::string vars;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        vars += space.coord(i);
        if (exps[i] > 1) vars += "^{" + std::to_string(exps[i]) + "}";
    }
    std::string num;
    if (vars.empty() || mag != 1) {
        if (denominator(mag) == 1)
            num = numerator(mag).str();
        else
            num = "\\tfrac{" + numerator(mag).str() + "}{" + denominator(mag).str() + "}";
    }
    return num + vars;
}

std::string generator_latex(const Space& space, const Generator& g, int exp) {
    bool all_single_digit = true;
    for (int k : g.slots)
        if (k > 9) all_single_digit = false;
    std::string sub;
    for (std::size_t i = 0; i < g.slots.size(); ++i) {
        if (i && !all_single_digit) sub += ",";
        sub += std::to_string(g.slots.elements()[i]);
    }
    std::string s = "d_{" + sub + "}" + space.coord(g.coord);
    if (exp > 1) s = "(" + s + ")^{" + std::to_string(exp) + "}";
    return s;
}

}  // namespace

std::string to_latex(const Poly& f) {
    std::vector<std::pair<int, std::string>> terms;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        int sign = 1;
        std::string t = poly_term_latex(f.space(), it->first, it->second, sign);
        terms.emplace_back(sign, std::move(t));
    }
    return join_signed(terms);
}

std::string to_latex(const Form& w) {
    std::vector<std::pair<int, std::string>> terms;
    for (const auto& [factors, coeff] : w.terms()) {
        if (factors.empty()) {
            for (auto it = coeff.terms().rbegin(); it != coeff.terms().rend(); ++it) {
                int sign = 1;
                std::string t = poly_term_latex(w.space(), it->first, it->second, sign);
                terms.emplace_back(sign, std::move(t));
            }
            continue;
        }
        std::string gens;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) gens += "\\wedge ";
            gens += generator_latex(w.space(), factors[i].first, factors[i].second);
        }
        int sign = 1;
        std::string prefix;
        if (coeff.terms().size() == 1) {
            const auto& [exps, c] = *coeff.terms().begin();
            std::string t = poly_term_latex(w.space(), exps, c, sign);
            if (t != "1") prefix = t + "\\,";
        } else {
            prefix = "\\left(" + to_latex(coeff) + "\\right)";
        }
        terms.emplace_back(sign, prefix + gens);
    }
    return join_signed(terms);
}

}  // namespace iforms
