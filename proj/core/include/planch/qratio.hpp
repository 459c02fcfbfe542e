#pragma once

#include <string>

#include "planch/qhalfpoly.hpp"

namespace planch {

// Rational function in q (through v = q^(1/2)), stored as a reduced
// numerator/denominator pair. Canonical form: both parts are ordinary
// polynomials in v (no negative exponents), at least one with a nonzero
// constant term, gcd one, jointly primitive integer coefficients, and a
// positive leading denominator coefficient.
class QRatio {
 public:
  QRatio() : num_(BigRat(1)), den_(BigRat(1)) {}
  QRatio(const BigRat& c) : num_(c), den_(BigRat(1)) { normalize(); }
  QRatio(long long c) : QRatio(BigRat(c)) {}
  explicit QRatio(QHalfPoly n) : num_(std::move(n)), den_(BigRat(1)) { normalize(); }
  QRatio(QHalfPoly n, QHalfPoly d);

  static QRatio q_pow(HalfInt a) { return QRatio(QHalfPoly::q_pow(a)); }
  static QRatio one() { return QRatio(); }
  static QRatio zero() { return QRatio(BigRat(0)); }

  const QHalfPoly& num() const { return num_; }
  const QHalfPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }
  bool is_rational_constant() const;
  BigRat rational_constant() const;  // InputError when not constant

  friend QRatio operator+(const QRatio& a, const QRatio& b);
  friend QRatio operator-(const QRatio& a, const QRatio& b);
  friend QRatio operator*(const QRatio& a, const QRatio& b);
  friend QRatio operator/(const QRatio& a, const QRatio& b);
  QRatio operator-() const;
  QRatio& operator*=(const QRatio& o) { return *this = *this * o; }

  QRatio inverse() const;
  QRatio pow(long long e) const;

  // Canonical forms make structural equality the same as equality of
  // rational functions.
  friend bool operator==(const QRatio& a, const QRatio& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  // Cross-multiplied equality; skips reduction of intermediate products.
  static bool equal_cross(const QRatio& a, const QRatio& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  // q -> q^k, exact.
  QRatio substitute_q_pow(long long k) const;

  // Evaluate at a real q > 0; SingularityError when the denominator
  // all but vanishes there.
  double eval_at_q(double q) const;

  // "(q^2 + q + 1)/(q^2)" style; plain numerator when the denominator is 1.
  std::string str() const;

 private:
  void normalize();
  QHalfPoly num_, den_;
};

}  // namespace planch
