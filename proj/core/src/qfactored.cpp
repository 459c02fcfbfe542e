#include "planch/qfactored.hpp"

#include <cmath>

namespace planch {

QFactored QFactored::from_rational(const BigRat& c) {
  if (c == 0) throw InputError("factored scalars are nonzero");
  QFactored f;
  f.c_ = c;
  return f;
}

QFactored QFactored::q_pow(HalfInt h) {
  QFactored f;
  f.h_ = h;
  return f;
}

QFactored QFactored::q_pow_minus_one(long long a, long long e) {
  if (a < 1) throw InputError("factor q^a - 1 needs a >= 1");
  QFactored f;
  if (e != 0) f.e_[a] = e;
  return f;
}

QFactored operator*(const QFactored& a, const QFactored& b) {
  QFactored r = a;
  r.c_ *= b.c_;
  r.h_ += b.h_;
  for (const auto& [k, e] : b.e_) {
    auto it = r.e_.find(k);
    if (it == r.e_.end()) {
      r.e_[k] = e;
    } else {
      it->second += e;
      if (it->second == 0) r.e_.erase(it);
    }
  }
  return r;
}

QFactored operator/(const QFactored& a, const QFactored& b) { return a * b.inverse(); }

QFactored QFactored::inverse() const {
  QFactored r;
  r.c_ = BigRat(1) / c_;
  r.h_ = -h_;
  for (const auto& [k, e] : e_) r.e_[k] = -e;
  return r;
}

QFactored QFactored::pow(long long e) const {
  QFactored r;
  r.c_ = rat_pow(c_, e);
  r.h_ = h_ * e;
  if (e != 0)
    for (const auto& [k, x] : e_) r.e_[k] = x * e;
  return r;
}

QFactored QFactored::substitute_q_pow(long long k) const {
  if (k < 1) throw InputError("substitution exponent must be positive");
  QFactored r;
  r.c_ = c_;
  r.h_ = h_ * k;
  for (const auto& [a, e] : e_) r.e_[a * k] = e;
  return r;
}

double QFactored::eval_at_q(double q) const {
  double acc = rat_double(c_) * std::pow(q, h_.value());
  for (const auto& [a, e] : e_) acc *= std::pow(std::pow(q, static_cast<double>(a)) - 1.0, static_cast<double>(e));
  return acc;
}

QRatio QFactored::expand() const {
  QHalfPoly num{BigRat(numerator(c_))};
  QHalfPoly den{BigRat(denominator(c_))};
  long long twice = h_.twice();
  if (twice > 0)
    num *= QHalfPoly::monomial(BigRat(1), twice);
  else if (twice < 0)
    den *= QHalfPoly::monomial(BigRat(1), -twice);
  for (const auto& [a, e] : e_) {
    QHalfPoly f = QHalfPoly::q_pow_minus_one(HalfInt(a));
    if (e > 0)
      num *= f.pow(static_cast<unsigned long long>(e));
    else
      den *= f.pow(static_cast<unsigned long long>(-e));
  }
  return QRatio(std::move(num), std::move(den));
}

}  // namespace planch
