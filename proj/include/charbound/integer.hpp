#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace charbound {

using Integer = boost::multiprecision::cpp_int;

inline Integer ipow(const Integer& base, std::uint64_t exp) {
  Integer result = 1;
  Integer b = base;
  while (exp != 0) {
    if ((exp & 1U) != 0) result *= b;
    exp >>= 1U;
    if (exp != 0) b *= b;
  }
  return result;
}

inline Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline Integer factorial(std::int64_t n) {
  Integer r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline std::string to_string(const Integer& x) { return x.str(); }

}  // namespace charbound
