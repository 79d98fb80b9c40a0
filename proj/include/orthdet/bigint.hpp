#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace orthdet {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt ipow(BigInt base, std::uint64_t exp) {
  BigInt result = 1;
  while (exp != 0) {
    if (exp & 1U) result *= base;
    exp >>= 1U;
    if (exp != 0) base *= base;
  }
  return result;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const BigRational& v) {
  const BigInt& den = boost::multiprecision::denominator(v);
  if (den == 1) return boost::multiprecision::numerator(v).str();
  return boost::multiprecision::numerator(v).str() + "/" + den.str();
}

inline bool is_even(const BigInt& v) { return v % 2 == 0; }

}  // namespace orthdet
