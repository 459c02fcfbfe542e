#pragma once

#include "planch/density.hpp"

namespace planch {

// Measure-transfer constant of the division algebra D of degree d over F,
// for GL(n, F) with n = d * n_prime:
//   lambda(D/F) = prod (q^m - 1)^{-1},  1 <= m <= n-1,  m not divisible by d.
QFactored lambda_DF(int d, int n_prime);

// Formal degree of the Steinberg representation of GL(n_prime, D):
//   (1/n) * prod_{j=1..n_prime-1} (q^{dj} - 1),  n = d * n_prime.
QFactored steinberg_fd_division(int d, int n_prime);

// Pushes a density report of GL(d * n_prime, F) through the Jacquet-
// Langlands correspondence: the torus factors survive unchanged and the
// constant picks up lambda(D/F). The caller asserts the component lies in
// the transfer image; only the total size is checkable here.
DensityReport transfer_density(const DensityReport& report, int d, int n_prime);

// Comparison of a single-cuspidal component against its reference datum:
// the Iwahori component of GL(e, K) with the same partition, where the
// residue field of K has q^r elements.
struct KappaResult {
  // density(spec) / density(reference): exact, torus factors cancel.
  QRatio kappa;
  // Iwahori volume of GL(e, K): 1 / P_{S_e}(q^r).
  QRatio iwahori_volume_ref;
  // iwahori_volume_ref / kappa: the normalized volume mu(J)/dim(lambda)
  // of the type subgroup implied by the comparison.
  QRatio normalized_volume;
};

// The two densities live on the same torus after z_K = z and q_K = q^r;
// their factor lists must cancel exactly (NotProportionalError otherwise,
// which would signal an internal formula bug) and the ratio is the constant
// kappa. The cuspidal formal degree must be exact or derivable
// (MissingDataError when only a numeric value is supplied); the canonical
// masses contribute (m/r)^k. kappa does not depend on the chosen partition
// of e.
KappaResult kappa(const ComponentSpec& spec);

// The d(sigma)-free part of kappa in factored form, after verifying factor
// cancellation: kappa = kappa_base(spec).expand() * d(sigma)^e. Staying in
// factored form keeps partition-independence sweeps in exponent arithmetic.
QFactored kappa_base(const ComponentSpec& spec);

}  // namespace planch
