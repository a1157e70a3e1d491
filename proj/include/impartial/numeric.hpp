#pragma once

// Exact arithmetic aliases. Divisibility arguments drive the closed-form
// counts, so everything downstream of them is big-integer / rational.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace impartial {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Integer pow2(int k) {
  if (k < 0) throw std::invalid_argument("pow2: negative exponent");
  return Integer(1) << k;
}

inline std::string to_decimal(const Integer& x) { return x.str(); }

}  // namespace impartial
