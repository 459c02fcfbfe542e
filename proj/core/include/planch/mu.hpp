#pragma once

#include <span>

#include "planch/combinatorics.hpp"
#include "planch/invariants.hpp"
#include "planch/qfactored.hpp"
#include "planch/torusexpr.hpp"

namespace planch {

// One segment of a tempered type: which cuspidal block it belongs to, its
// length, and which torus coordinate carries its unramified twist.
struct SegmentInstance {
  int cuspidal = 0;
  Segment seg{1};
  int torus = 0;
};

// Harish-Chandra mu-function of an adjacent pair of segments, as a factored
// expression in the two torus coordinates. Segments on distinct cuspidal
// blocks give a constant gamma^2 * q^{l_a l_b f_ab}; segments on the same
// block additionally carry the squared-modulus torus factors
//   prod_{g = |g_a - g_b|}^{g_a + g_b} |1 - z_b/z_a q^{g r}|^2
//                                     / |1 - z_b/z_a q^{-(g+1) r}|^2,
// g stepping by 1. gamma is the gamma factor of the maximal parabolic
// subgroup attached to the pair of blocks.
FactoredFn mu_pair(const SegmentInstance& a, const SegmentInstance& b, const FundamentalInvariants& inv);

// Scalar part of mu_pair in factored form (the torus factors are the same
// either way); lets identity sweeps stay in exponent arithmetic.
QFactored mu_pair_constant_factored(const SegmentInstance& a, const SegmentInstance& b,
                                    const FundamentalInvariants& inv);

// Conductor of the pair of generalized Steinberg representations:
// l_a l_b f_ab across blocks, l_a l_b f + r (l_a l_b - min(l_a, l_b)) on a
// single block.
HalfInt conductor_pair(const SegmentInstance& a, const SegmentInstance& b,
                       const FundamentalInvariants& inv);

// Product of mu_pair over all unordered pairs; the mu-function of the full
// Levi. One segment gives the constant 1.
FactoredFn mu_levi(std::span<const SegmentInstance> segs, const FundamentalInvariants& inv);

// The j-function of the component, defined on a single cuspidal block
// (MixedCuspidalError otherwise):
//   q^{-l(gamma) f} * prod_{pairs} prod_g |1 - z_j/z_i q^{-(g+1) r}|^2
//                                       / |1 - z_j/z_i q^{g r}|^2
// with l(gamma) = sum_{i<j} l_i l_j. The sign of the conductor exponent is
// pinned by the closure identity c^{-2} gamma^{-1} mu = gamma j^{-1}.
FactoredFn j_function(std::span<const SegmentInstance> segs, const FundamentalInvariants& inv);

}  // namespace planch
