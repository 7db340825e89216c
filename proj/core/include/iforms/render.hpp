#ifndef IFORMS_RENDER_HPP
#define IFORMS_RENDER_HPP

#include <string>

#include "iforms/form.hpp"
#include "iforms/poly.hpp"
#include "iforms/tensor.hpp"

namespace iforms {

// Text output is deterministic and parses back to the identical normal form.

std::string to_text(const Poly& f);
std::string to_text(const Form& w);
std::string to_text(const CovariantTensor& t);

std::string to_latex(const Poly& f);
std::string to_latex(const Form& w);

}  // namespace iforms

#endif
