#include "planch/qratio.hpp"

#include <cmath>

namespace planch {

QRatio::QRatio(QHalfPoly n, QHalfPoly d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw InputError("rational function with zero denominator");
  normalize();
}

void QRatio::normalize() {
  if (den_.is_zero()) throw InputError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = QHalfPoly(BigRat(1));
    return;
  }
  // Shift both by a common power of v so they are ordinary polynomials and
  // at least one has a nonzero constant term.
  long long s = std::min(num_.min_vexp(), den_.min_vexp());
  if (s != 0) {
    QHalfPoly n2, d2;
    for (const auto& [e, c] : num_.terms()) n2.add_term(c, e - s);
    for (const auto& [e, c] : den_.terms()) d2.add_term(c, e - s);
    num_ = std::move(n2);
    den_ = std::move(d2);
  }
  QHalfPoly g = poly_gcd(num_, den_);
  if (!(g.is_constant() && g.constant_value() == 1)) {
    auto qn = num_.divided_by(g);
    auto qd = den_.divided_by(g);
    if (!qn || !qd) throw Error("internal: polynomial gcd does not divide its arguments");
    num_ = *qn;
    den_ = *qd;
  }
  // Joint content normalization: integer coefficients, overall content one,
  // positive leading denominator coefficient.
  BigRat cn = num_.content(), cd = den_.content();
  // Divide both by gcd of contents: gcd(a/b, c/d) = gcd(a,c)/lcm(b,d).
  BigInt gn = boost::multiprecision::gcd(numerator(cn), numerator(cd));
  BigInt gl = boost::multiprecision::lcm(denominator(cn), denominator(cd));
  BigRat scale(gn, gl);
  if (den_.leading_coeff() < 0) scale = -scale;
  if (scale != 1) {
    QHalfPoly n2, d2;
    for (const auto& [e, c] : num_.terms()) n2.add_term(c / scale, e);
    for (const auto& [e, c] : den_.terms()) d2.add_term(c / scale, e);
    num_ = std::move(n2);
    den_ = std::move(d2);
  }
}

bool QRatio::is_rational_constant() const { return num_.is_constant() && den_.is_constant(); }

BigRat QRatio::rational_constant() const {
  if (!is_rational_constant()) throw InputError("rational function is not constant: " + str());
  if (num_.is_zero()) return BigRat(0);
  return num_.constant_value() / den_.constant_value();
}

QRatio operator+(const QRatio& a, const QRatio& b) {
  return QRatio(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QRatio operator-(const QRatio& a, const QRatio& b) {
  return QRatio(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

QRatio operator*(const QRatio& a, const QRatio& b) { return QRatio(a.num_ * b.num_, a.den_ * b.den_); }

QRatio operator/(const QRatio& a, const QRatio& b) {
  if (b.is_zero()) throw InputError("division by the zero rational function");
  return QRatio(a.num_ * b.den_, a.den_ * b.num_);
}

QRatio QRatio::operator-() const {
  QRatio r = *this;
  r.num_ = -r.num_;
  return r;
}

QRatio QRatio::inverse() const {
  if (is_zero()) throw InputError("inverse of the zero rational function");
  return QRatio(den_, num_);
}

QRatio QRatio::pow(long long e) const {
  if (e == 0) return QRatio::one();
  QRatio base = e < 0 ? inverse() : *this;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  return QRatio(base.num_.pow(n), base.den_.pow(n));
}

QRatio QRatio::substitute_q_pow(long long k) const {
  return QRatio(num_.substitute_q_pow(k), den_.substitute_q_pow(k));
}

double QRatio::eval_at_q(double q) const {
  if (q <= 0) throw DomainError("rational functions in q^(1/2) need q > 0");
  double d = den_.eval_at_q(q);
  if (std::abs(d) < 1e-14) throw SingularityError("denominator vanishes at q = " + std::to_string(q));
  return num_.eval_at_q(q) / d;
}

std::string QRatio::str() const {
  if (den_ == QHalfPoly(BigRat(1))) return num_.str();
  std::string n = num_.str();
  if (num_.terms().size() > 1) n = "(" + n + ")";
  std::string d = den_.str();
  return n + "/(" + d + ")";
}

}  // namespace planch
