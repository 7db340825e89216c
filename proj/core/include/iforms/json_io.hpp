#ifndef IFORMS_JSON_IO_HPP
#define IFORMS_JSON_IO_HPP

#include <string>
#include <vector>

#include "iforms/form.hpp"
#include "iforms/poly.hpp"
#include "iforms/tensor.hpp"

namespace iforms {

// Serialized output is deterministic under the canonical term orders and
// round-trips bit-exactly: rationals travel as decimal strings.

std::string to_json_string(const Poly& f);
Poly poly_from_json(const std::string& text, const Space& space);

std::string to_json_string(const Form& w);
Form form_from_json(const std::string& text);

std::string to_json_string(const CovariantTensor& t);
CovariantTensor tensor_from_json(const std::string& text);

/// {"space":[...],"vector_fields":[{"components":[<poly>,...]},...]}
std::vector<VectorField> vector_fields_from_json(const std::string& text);
std::string to_json_string(const std::vector<VectorField>& fields);

}  // namespace iforms

#endif
