#ifndef IFORMS_ERROR_HPP
#define IFORMS_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace iforms {

/// Thrown on domain violations (space mismatch, bad slot, wrong degree, ...).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown by the expression parser; carries a 1-based source position.
struct ParseError : Error {
    ParseError(std::string msg, std::size_t line, std::size_t column)
        : Error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line(line),
          column(column) {}

    std::size_t line;
    std::size_t column;
};

}  // namespace iforms

#endif
