#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace unimodal_lab {

/// Arbitrary-precision integer (GMP backed).
using BigInt = mpz_class;

/// Arbitrary-precision rational, always kept in canonical form
/// (positive denominator, reduced).
using BigRational = mpq_class;

/// Builds num/den in canonical form. GMP aborts on a zero denominator, so
/// that case is turned into an exception here.
inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

inline BigRational checked_div(const BigRational& a, const BigRational& b) {
  if (b == 0) throw std::domain_error("rational division by zero");
  return a / b;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const BigRational& v) { return v.get_str(); }

}  // namespace unimodal_lab
