#pragma once

#include <map>
#include <optional>
#include <string>

#include "planch/halfint.hpp"
#include "planch/rational.hpp"

namespace planch {

// Laurent polynomial in v = q^(1/2) with exact rational coefficients.
// Integer powers of q occupy the even v-exponents; negative exponents are
// allowed throughout. The zero coefficient is never stored.
class QHalfPoly {
 public:
  QHalfPoly() = default;
  explicit QHalfPoly(const BigRat& constant) {
    if (constant != 0) c_[0] = constant;
  }
  QHalfPoly(long long constant) : QHalfPoly(BigRat(constant)) {}

  static QHalfPoly monomial(const BigRat& coeff, long long vexp) {
    QHalfPoly p;
    if (coeff != 0) p.c_[vexp] = coeff;
    return p;
  }
  // q^a for a in (1/2)Z.
  static QHalfPoly q_pow(HalfInt a) { return monomial(BigRat(1), a.twice()); }
  // q^a - 1
  static QHalfPoly q_pow_minus_one(HalfInt a) {
    QHalfPoly p = q_pow(a);
    p.add_term(-1, 0);
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }
  BigRat constant_value() const {
    if (c_.empty()) return BigRat(0);
    auto it = c_.find(0);
    return it == c_.end() ? BigRat(0) : it->second;
  }

  long long min_vexp() const;  // InputError on zero
  long long max_vexp() const;
  bool only_even_exponents() const;
  const std::map<long long, BigRat>& terms() const { return c_; }

  void add_term(const BigRat& coeff, long long vexp);

  QHalfPoly operator-() const;
  friend QHalfPoly operator+(const QHalfPoly& a, const QHalfPoly& b);
  friend QHalfPoly operator-(const QHalfPoly& a, const QHalfPoly& b);
  friend QHalfPoly operator*(const QHalfPoly& a, const QHalfPoly& b);
  QHalfPoly& operator+=(const QHalfPoly& o) { return *this = *this + o; }
  QHalfPoly& operator*=(const QHalfPoly& o) { return *this = *this * o; }
  friend bool operator==(const QHalfPoly& a, const QHalfPoly& b) { return a.c_ == b.c_; }

  QHalfPoly pow(unsigned long long e) const;

  // Exact quotient, or nullopt when the division leaves a remainder.
  std::optional<QHalfPoly> divided_by(const QHalfPoly& d) const;

  // v -> v^k (k >= 1), i.e. q -> q^k.
  QHalfPoly substitute_q_pow(long long k) const;
  // v -> v^{-1}, i.e. q -> 1/q.
  QHalfPoly reciprocal_variable() const;

  double eval_at_q(double q) const;

  // Leading coefficient in v (highest exponent).
  BigRat leading_coeff() const;
  // gcd of the integer parts needed to clear and normalize contents:
  // returns g > 0 with (*this) / g having coprime integer coefficients.
  BigRat content() const;

  // Renders in the variable q, half powers as q^(1/2) style, terms in
  // descending exponent order: "q^2 - 2*q^(1/2) + 1/3".
  std::string str() const;

 private:
  std::map<long long, BigRat> c_;
};

// Polynomial gcd (primitive, positive leading coefficient) of the shifted
// ordinary-polynomial parts of a and b. Used by the rational-function layer.
QHalfPoly poly_gcd(QHalfPoly a, QHalfPoly b);

}  // namespace planch
