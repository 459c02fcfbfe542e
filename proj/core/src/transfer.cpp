#include "planch/transfer.hpp"

#include <sstream>

#include "planch/degrees.hpp"
#include "planch/errors.hpp"

namespace planch {

QFactored lambda_DF(int d, int n_prime) {
  if (d < 1 || n_prime < 1) throw InputError("lambda(D/F) needs d >= 1 and n' >= 1");
  const int n = d * n_prime;
  QFactored out;
  for (int m = 1; m < n; ++m)
    if (m % d != 0) out *= QFactored::q_pow_minus_one(m, -1);
  return out;
}

QFactored steinberg_fd_division(int d, int n_prime) {
  if (d < 1 || n_prime < 1) throw InputError("Steinberg degree needs d >= 1 and n' >= 1");
  const int n = d * n_prime;
  QFactored out = QFactored::from_rational(BigRat(1, n));
  for (int j = 1; j < n_prime; ++j) out *= QFactored::q_pow_minus_one(static_cast<long long>(d) * j, 1);
  return out;
}

DensityReport transfer_density(const DensityReport& report, int d, int n_prime) {
  if (d < 1 || n_prime < 1) throw InputError("transfer needs d >= 1 and n' >= 1");
  if (report.levi.total() != d * n_prime) {
    std::ostringstream os;
    os << "report describes GL(" << report.levi.total() << "), transfer expects GL(" << d * n_prime
       << ")";
    throw InputError(os.str());
  }
  DensityReport out = report;
  out.constant *= lambda_DF(d, n_prime).expand();
  return out;
}

QFactored kappa_base(const ComponentSpec& spec) {
  if (spec.inv.cuspidals.size() != 1)
    throw MixedCuspidalError("the reference comparison needs a single cuspidal block");
  const CuspidalDatum& c = spec.inv.cuspidals[0];
  const Partition& p = spec.partitions[0];
  const int k = p.length();

  ComponentSpec ref = iwahori_component(c.e, spec.inv.q, p);

  // Factor lists must agree once the reference exponents are scaled by r.
  FactoredFn mu_ref = mu_levi(ref.segments, ref.inv);
  std::vector<TorusFactor> scaled = mu_ref.factors();
  for (auto& f : scaled) f.a = f.a * c.r;
  FactoredFn mu_spec = mu_levi(spec.segments, spec.inv);
  if (mu_spec.factors() != scaled)
    throw NotProportionalError("torus factors of the component and its reference do not cancel");

  // Numerator: gamma on the Levi {l m} times conductor powers, the
  // formal-degree ratios, and the mass ratio (m/r)^k.
  QFactored num = gamma_factor_factored(spec.levi());
  long long f_self = resolved_conductor(c);
  long long ftot = 0;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      ftot += static_cast<long long>(p.parts[a]) * p.parts[b] * f_self;
  num *= QFactored::q_pow(HalfInt(ftot));
  for (int l : p.parts) num *= fd_ratio(c.m, l, c.r, f_self);
  num *= QFactored::from_rational(rat_pow(BigRat(c.m, c.r), k));

  // Denominator: the same data for the Iwahori component of GL(e, K),
  // with q_K = q^r.
  QFactored den = gamma_factor_factored(ref.levi());
  for (int l : p.parts) den *= steinberg_fd(l);
  den = den.substitute_q_pow(c.r);

  return num / den;
}

KappaResult kappa(const ComponentSpec& spec) {
  if (spec.inv.cuspidals.size() != 1)
    throw MixedCuspidalError("the reference comparison needs a single cuspidal block");
  const CuspidalDatum& c = spec.inv.cuspidals[0];

  QRatio d_sigma;
  switch (c.d.mode) {
    case FdMode::Exact:
      d_sigma = c.d.exact;
      break;
    case FdMode::Derive:
    case FdMode::Unset:
      d_sigma = derive_formal_degree(c);
      break;
    case FdMode::Numeric:
      throw MissingDataError("numeric formal degree cannot enter the exact comparison constant");
  }

  KappaResult out;
  out.kappa = kappa_base(spec).expand() * d_sigma.pow(c.e);
  out.iwahori_volume_ref = iwahori_volume(c.e).substitute_q_pow(c.r);
  out.normalized_volume = out.iwahori_volume_ref / out.kappa;
  return out;
}

}  // namespace planch
