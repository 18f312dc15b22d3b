#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cubicpm {

/// Exact rational arithmetic for ranks, polytope checks and bound slacks.
using Rational = boost::multiprecision::cpp_rational;

/// "p/q", or "p" for integers.
inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace cubicpm
