#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace branchlat {

// Arbitrary-precision integers and rationals. Everything numeric in this
// library is exact; no floating point anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string integer_str(const Integer& z) { return z.str(); }

// Exact decimal string, "a" when the denominator is 1, else "a/b".
inline std::string rational_str(const Rational& q) {
  Integer num = boost::multiprecision::numerator(q);
  Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace branchlat
