#include "planch/degrees.hpp"

#include "planch/groupdata.hpp"

namespace planch {

QFactored steinberg_fd(int l) {
  if (l < 1) throw InputError("Steinberg formal degree needs l >= 1");
  QFactored f = QFactored::from_rational(BigRat(1, l));
  for (long long j = 1; j < l; ++j) f *= QFactored::q_pow_minus_one(j);
  return f;
}

QFactored steinberg_fd_group_form(int l) {
  if (l < 1) throw InputError("Steinberg formal degree needs l >= 1");
  return QFactored::q_pow(HalfInt::from_twice(static_cast<long long>(l) - static_cast<long long>(l) * l)) *
         QFactored::from_rational(BigRat(1, l)) * gl_order_factored(l) /
         QFactored::q_pow_minus_one(l);
}

namespace {

void check_ratio_inputs(int m, int e, int r, long long f) {
  if (m < 1 || e < 1 || r < 1) throw InputError("formal degree ratio needs m, e, r >= 1");
  if (m % r != 0) throw InputError("torsion number must divide m");
  if (f < 0) throw InputError("self-conductor must be nonnegative");
}

}  // namespace

QFactored fd_ratio(int m, int e, int r, long long f) {
  check_ratio_inputs(m, e, r, f);
  long long em = static_cast<long long>(e) * m;
  long long e2e = static_cast<long long>(e) * e - e;
  QFactored out = QFactored::from_rational(rat_pow(BigRat(m), e - 1) / (rat_pow(BigRat(r), e - 1) * e));
  out *= QFactored::q_pow(HalfInt::from_twice(e2e * (f + r - 2LL * m * m)));
  out *= QFactored::q_pow_minus_one(r, e);
  out /= QFactored::q_pow_minus_one(static_cast<long long>(e) * r);
  out *= gl_order_factored(static_cast<int>(em));
  out /= gl_order_factored(m).pow(e);
  return out;
}

QFactored fd_ratio_steinberg_form(int m, int e, int r, long long f) {
  check_ratio_inputs(m, e, r, f);
  long long em = static_cast<long long>(e) * m;
  long long e2e = static_cast<long long>(e) * e - e;
  QFactored out = QFactored::from_rational(rat_pow(BigRat(r), 1 - e));
  out *= QFactored::q_pow_minus_one(em);
  out *= QFactored::q_pow_minus_one(r, e);
  out /= QFactored::q_pow_minus_one(m, e);
  out /= QFactored::q_pow_minus_one(static_cast<long long>(e) * r);
  out *= QFactored::q_pow(HalfInt::from_twice(e2e * (f + r - static_cast<long long>(m) * m)));
  out *= steinberg_fd(static_cast<int>(em));
  out /= steinberg_fd(m).pow(e);
  return out;
}

QFactored fd_ratio_conductor_free(int m, int e, int r) {
  check_ratio_inputs(m, e, r, 0);
  long long em = static_cast<long long>(e) * m;
  long long ee = static_cast<long long>(e) * e;
  QFactored out = QFactored::from_rational(rat_pow(BigRat(r), 1 - ee));
  out *= QFactored::q_pow_minus_one(em);
  out *= QFactored::q_pow_minus_one(r, ee);
  out /= QFactored::q_pow_minus_one(static_cast<long long>(e) * r);
  out /= QFactored::q_pow_minus_one(m, ee);
  out *= QFactored::q_pow(HalfInt::from_twice((ee - e) * (m - r)));
  out *= steinberg_fd(static_cast<int>(em));
  out /= steinberg_fd(m).pow(ee);
  return out;
}

QFactored fd_ratio_discriminant_form(int m, int e, int r, HalfInt delta) {
  check_ratio_inputs(m, e, r, 0);
  if (delta < HalfInt(0)) throw InputError("discriminant exponent must be nonnegative");
  long long em = static_cast<long long>(e) * m;
  long long e2e = static_cast<long long>(e) * e - e;
  QFactored out = QFactored::from_rational(rat_pow(BigRat(r), 1 - e));
  out *= QFactored::q_pow_minus_one(em);
  out *= QFactored::q_pow_minus_one(r, e);
  out /= QFactored::q_pow_minus_one(static_cast<long long>(e) * r);
  out /= QFactored::q_pow_minus_one(m, e);
  out *= QFactored::q_pow((delta * e2e).halved());
  out *= steinberg_fd(static_cast<int>(em));
  out /= steinberg_fd(m).pow(e);
  return out;
}

QFactored fd_generalized_steinberg_exact(const CuspidalDatum& c, int l) {
  if (l < 1) throw InputError("generalized Steinberg needs l >= 1");
  if (!c.delta) throw MissingDataError("exact formal degree needs the discriminant exponent");
  HalfInt delta = *c.delta;
  long long lm = static_cast<long long>(l) * c.m;
  long long lr = static_cast<long long>(l) * c.r;
  HalfInt exponent = (HalfInt(lr - lm) + delta * (static_cast<long long>(l) * l)).halved();
  QFactored out = QFactored::from_rational(BigRat(c.r));
  out *= QFactored::q_pow_minus_one(lm);
  out /= QFactored::q_pow_minus_one(lr);
  out *= QFactored::q_pow(exponent);
  out *= steinberg_fd(static_cast<int>(lm));
  return out;
}

Scalar fd_generalized_steinberg(const CuspidalDatum& c, int l, long long q) {
  if (l < 1) throw InputError("generalized Steinberg needs l >= 1");
  switch (c.d.mode) {
    case FdMode::Exact: {
      QFactored ratio = fd_ratio(c.m, l, c.r, resolved_conductor(c));
      return Scalar(ratio.expand() * c.d.exact.pow(l));
    }
    case FdMode::Derive:
      return Scalar(fd_generalized_steinberg_exact(c, l).expand());
    case FdMode::Numeric: {
      if (c.d.numeric <= 0) throw InputError("numeric formal degree must be positive");
      QFactored ratio = fd_ratio(c.m, l, c.r, resolved_conductor(c));
      double d = 1.0;
      for (int i = 0; i < l; ++i) d *= c.d.numeric;
      return Scalar(ratio.eval_at_q(static_cast<double>(q)) * d);
    }
    case FdMode::Unset:
      if (c.delta) return Scalar(fd_generalized_steinberg_exact(c, l).expand());
      throw MissingDataError("cuspidal carries neither a formal degree nor a discriminant exponent");
  }
  throw MissingDataError("cuspidal carries no usable formal degree data");
}

Scalar fd_product(const std::vector<Scalar>& values, long long q) {
  Scalar acc = Scalar::one();
  for (const auto& v : values) acc.mul(v, static_cast<double>(q));
  return acc;
}

}  // namespace planch
