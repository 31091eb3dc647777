#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cpx {

// Arbitrary precision keeps every identity check exact; intermediate
// coefficients of Bareiss eliminations and Bezoutians outgrow 64 bits.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& v) { return v.str(); }

inline std::string to_string(const Rational& v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

}  // namespace cpx
