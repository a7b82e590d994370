#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace orbitrace {

/// Arbitrary-precision integer used for every coefficient in the library.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Integer& n) { return n.str(); }

inline std::string to_string(const Rational& q)
{
  if (denominator(q) == 1)
    return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Floor division and the matching non-negative remainder for m > 0.
inline std::int64_t floor_div(std::int64_t a, std::int64_t m)
{
  std::int64_t q = a / m;
  if ((a % m != 0) && ((a < 0) != (m < 0)))
    --q;
  return q;
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t m)
{
  return a - floor_div(a, m) * m;
}

}  // namespace orbitrace
