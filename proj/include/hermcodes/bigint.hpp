#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hermcodes {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// cpp_rational rejects a negative denominator; move the sign to the numerator.
inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  return den < 0 ? BigRational(BigInt(-num), BigInt(-den)) : BigRational(num, den);
}

inline BigInt big_pow(const BigInt& base, unsigned exp) { return boost::multiprecision::pow(base, exp); }

}  // namespace hermcodes
