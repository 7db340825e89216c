#include "iforms/json_io.hpp"

#include <json.hpp>

#include "iforms/error.hpp"

namespace iforms {

namespace {

using nlohmann::json;

json poly_to_json(const Poly& f) {
    json terms = json::array();
    for (const auto& [exps, c] : f.terms()) {
        terms.push_back(
            {{"exps", exps}, {"num", numerator_string(c)}, {"den", denominator_string(c)}});
    }
    return {{"terms", terms}};
}

Poly poly_from(const json& j, const Space& space) {
    Poly f(space);
    for (const auto& term : j.at("terms")) {
        std::vector<int> exps = term.at("exps").get<std::vector<int>>();
        Rational c(Integer(term.at("num").get<std::string>()),
                   Integer(term.at("den").get<std::string>()));
        f.add_term(std::move(exps), c);
    }
    return f;
}

json form_to_json(const Form& w) {
    json terms = json::array();
    for (const auto& [factors, coeff] : w.terms()) {
        json fs = json::array();
        for (const auto& [g, e] : factors) {
            fs.push_back({{"K", g.slots.elements()},
                          {"coord", w.space().coord(g.coord)},
                          {"exp", e}});
        }
        terms.push_back({{"coeff", poly_to_json(coeff)}, {"factors", fs}});
    }
    return {{"space", w.space().coords()}, {"terms", terms}};
}

Form form_from(const json& j) {
    Space space(j.at("space").get<std::vector<std::string>>());
    Form w(space);
    for (const auto& term : j.at("terms")) {
        Poly coeff = poly_from(term.at("coeff"), space);
        std::vector<Generator> gens;
        for (const auto& f : term.at("factors")) {
            Generator g{IndexSet(f.at("K").get<std::vector<int>>()),
                        space.require(f.at("coord").get<std::string>())};
            int e = f.at("exp").get<int>();
            if (e < 1) throw Error("generator exponent must be positive");
            for (int i = 0; i < e; ++i) gens.push_back(g);
        }
        w.add_raw(coeff, std::move(gens));
    }
    return w;
}

json tensor_to_json(const CovariantTensor& t) {
    json comps = json::array();
    for (const auto& [idx, value] : t.components()) {
        json names = json::array();
        for (std::size_t i : idx) names.push_back(t.space().coord(i));
        comps.push_back({{"idx", names}, {"value", poly_to_json(value)}});
    }
    return {{"space", t.space().coords()},
            {"order", t.order()},
            {"components", comps}};
}

CovariantTensor tensor_from(const json& j) {
    Space space(j.at("space").get<std::vector<std::string>>());
    CovariantTensor t(space, j.at("order").get<std::size_t>());
    for (const auto& comp : j.at("components")) {
        CovariantTensor::IndexTuple idx;
        for (const auto& name : comp.at("idx")) idx.push_back(space.require(name.get<std::string>()));
        t.set_component(std::move(idx), poly_from(comp.at("value"), space));
    }
    return t;
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error("malformed JSON input");
    return j;
}

/// Converts nlohmann's structural exceptions (missing key, wrong type) into
/// the library's own error type.
template <typename F>
auto guarded(F&& body) {
    try {
        return body();
    } catch (const json::exception& e) {
        throw Error(std::string("invalid JSON payload: ") + e.what());
    }
}

}  // namespace

std::string to_json_string(const Poly& f) { return poly_to_json(f).dump(); }

Poly poly_from_json(const std::string& text, const Space& space) {
    return guarded([&] { return poly_from(parse_json(text), space); });
}

std::string to_json_string(const Form& w) { return form_to_json(w).dump(); }

Form form_from_json(const std::string& text) {
    return guarded([&] { return form_from(parse_json(text)); });
}

std::string to_json_string(const CovariantTensor& t) { return tensor_to_json(t).dump(); }

CovariantTensor tensor_from_json(const std::string& text) {
    return guarded([&] { return tensor_from(parse_json(text)); });
}

std::vector<VectorField> vector_fields_from_json(const std::string& text) {
    return guarded([&] {
        json j = parse_json(text);
        Space space(j.at("space").get<std::vector<std::string>>());
        std::vector<VectorField> fields;
        for (const auto& entry : j.at("vector_fields")) {
            std::vector<Poly> comps;
            for (const auto& c : entry.at("components")) comps.push_back(poly_from(c, space));
            fields.emplace_back(space, std::move(comps));
        }
        return fields;
    });
}

std::string to_json_string(const std::vector<VectorField>& fields) {
    if (fields.empty()) throw Error("cannot serialize an empty vector field list");
    json entries = json::array();
    for (const auto& x : fields) {
        if (x.space() != fields.front().space()) throw Error("vector field space mismatch");
        json comps = json::array();
        for (const auto& c : x.components()) comps.push_back(poly_to_json(c));
        entries.push_back({{"components", comps}});
    }
    return json{{"space", fields.front().space().coords()}, {"vector_fields", entries}}.dump();
}

}  // namespace iforms
