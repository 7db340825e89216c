#ifndef IFORMS_RATIONAL_HPP
#define IFORMS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace iforms {

// All arithmetic in the engine is exact; there is no floating point anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string numerator_string(const Rational& q) { return numerator(q).str(); }
inline std::string denominator_string(const Rational& q) { return denominator(q).str(); }

}  // namespace iforms

#endif
