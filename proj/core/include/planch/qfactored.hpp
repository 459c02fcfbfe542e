#pragma once

#include <map>

#include "planch/qratio.hpp"

namespace planch {

// Nonzero scalar kept in the factored form
//
//     c * q^h * prod_{a >= 1} (q^a - 1)^{e_a}
//
// with c an exact rational, h a half-integer and integer exponents e_a.
// Group orders, Steinberg-type formal degrees and their ratios all live in
// this monoid, where products, quotients and equality are integer work on
// the exponent table instead of polynomial arithmetic. Exponent-table
// equality is sufficient for equality of the underlying rational functions;
// expand() converts back exactly when the dense form is wanted.
class QFactored {
 public:
  QFactored() = default;  // 1

  static QFactored from_rational(const BigRat& c);
  static QFactored q_pow(HalfInt h);
  // (q^a - 1)^e, a >= 1
  static QFactored q_pow_minus_one(long long a, long long e = 1);

  bool is_one() const { return c_ == 1 && h_.is_zero() && e_.empty(); }
  const BigRat& coefficient() const { return c_; }
  HalfInt q_exponent() const { return h_; }
  const std::map<long long, long long>& cyclo_exponents() const { return e_; }

  friend QFactored operator*(const QFactored& a, const QFactored& b);
  friend QFactored operator/(const QFactored& a, const QFactored& b);
  QFactored& operator*=(const QFactored& o) { return *this = *this * o; }
  QFactored& operator/=(const QFactored& o) { return *this = *this / o; }
  QFactored pow(long long e) const;
  QFactored inverse() const;

  friend bool operator==(const QFactored& a, const QFactored& b) = default;

  // q -> q^k, exact.
  QFactored substitute_q_pow(long long k) const;

  double eval_at_q(double q) const;

  // Exact expansion into the reduced numerator/denominator form.
  QRatio expand() const;

  std::string str() const { return expand().str(); }

 private:
  BigRat c_ = BigRat(1);
  HalfInt h_;
  std::map<long long, long long> e_;
};

}  // namespace planch
