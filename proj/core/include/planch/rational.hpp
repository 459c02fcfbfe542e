#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "planch/errors.hpp"

namespace planch {

// Arbitrary-precision integers and rationals. cpp_rational keeps values
// reduced with a positive denominator, which is exactly the invariant the
// scalar layer needs.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt int_pow(const BigInt& base, unsigned long long e) {
  BigInt acc(1), b(base);
  while (e) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

inline BigRat rat_pow(const BigRat& base, long long e) {
  if (e == 0) return BigRat(1);
  if (base == 0) {
    if (e < 0) throw InputError("zero raised to a negative power");
    return BigRat(0);
  }
  BigRat b = base;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  BigRat acc(1);
  while (n) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  if (e < 0) acc = BigRat(1) / acc;
  return acc;
}

inline double rat_double(const BigRat& r) { return r.convert_to<double>(); }

// "3", "-5/2"
inline std::string rat_str(const BigRat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline bool rat_is_integer(const BigRat& r) { return denominator(r) == 1; }

inline long long rat_to_ll(const BigRat& r) {
  if (!rat_is_integer(r)) throw InputError("rational is not an integer: " + rat_str(r));
  return numerator(r).convert_to<long long>();
}

}  // namespace planch
