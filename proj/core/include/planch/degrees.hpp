#pragma once

#include "planch/invariants.hpp"
#include "planch/qfactored.hpp"
#include "planch/scalar.hpp"

namespace planch {

// Formal degree of the Steinberg representation of GL(l) under the
// normalization vol(GL(l, o)) = 1: (1/l) * prod_{j=1..l-1} (q^j - 1).
QFactored steinberg_fd(int l);
// Equivalent shape q^{(l-l^2)/2}/l * |GL(l,q)| / (q^l - 1): kept as a second
// route for the verification layer.
QFactored steinberg_fd_group_form(int l);

// Ratio d(pi)/d(sigma)^e for the generalized Steinberg representation built
// from e copies of a cuspidal of GL(m) with torsion number r and
// self-conductor f:
//   m^{e-1}/(r^{e-1} e) * q^{(e^2-e)(f + r - 2 m^2)/2}
//     * (q^r - 1)^e/(q^{er} - 1) * |GL(em,q)| / |GL(m,q)|^e.
// Preconditions: e,m,r >= 1, r | m, f >= 0.
QFactored fd_ratio(int m, int e, int r, long long f);
// The same ratio written through Steinberg degrees:
//   r^{1-e} (q^{em}-1)(q^r-1)^e / ((q^m-1)^e (q^{er}-1))
//     * q^{(e^2-e)(f + r - m^2)/2} * deg(St(em))/deg(St(m))^e.
QFactored fd_ratio_steinberg_form(int m, int e, int r, long long f);

// Conductor-free ratio d(pi)/d(sigma)^{e^2}:
//   r^{1-e^2} (q^{em}-1)(q^r-1)^{e^2} / ((q^{er}-1)(q^m-1)^{e^2})
//     * q^{(e^2-e)(m-r)/2} * deg(St(em))/deg(St(m))^{e^2}.
QFactored fd_ratio_conductor_free(int m, int e, int r);
// Discriminant form of d(pi)/d(sigma)^e:
//   r^{1-e} (q^{em}-1)(q^r-1)^e / ((q^{er}-1)(q^m-1)^e)
//     * q^{(e^2-e) delta / 2} * deg(St(em))/deg(St(m))^e.
QFactored fd_ratio_discriminant_form(int m, int e, int r, HalfInt delta);

// Exact formal degree of the generalized Steinberg built from l copies of
// the cuspidal, requiring the discriminant exponent:
//   r * (q^{lm}-1)/(q^{lr}-1) * q^{(lr - lm + l^2 delta)/2} * deg(St(lm)).
QFactored fd_generalized_steinberg_exact(const CuspidalDatum& c, int l);

// Mode-dispatching formal degree of the generalized Steinberg on l copies:
// exact d(sigma) composes with the ratio, derive uses the closed form,
// numeric evaluates the ratio at q and scales d^l. Precedence
// exact > derive > numeric; MissingDataError when nothing applies.
Scalar fd_generalized_steinberg(const CuspidalDatum& c, int l, long long q);

// Product of formal degrees (exact only while every operand is exact).
Scalar fd_product(const std::vector<Scalar>& values, long long q);

}  // namespace planch
