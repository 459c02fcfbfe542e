#include "planch/mu.hpp"

#include "planch/groupdata.hpp"

namespace planch {

namespace {

const CuspidalDatum& datum(const FundamentalInvariants& inv, int idx) {
  if (idx < 0 || idx >= static_cast<int>(inv.cuspidals.size()))
    throw IndexError("segment refers to a cuspidal index outside the invariants");
  return inv.cuspidals[idx];
}

long long pair_conductor_multiplier(const SegmentInstance& a, const SegmentInstance& b) {
  return static_cast<long long>(a.seg.l) * b.seg.l;
}

// gamma factor of the maximal parabolic attached to the two blocks.
QFactored pair_gamma(const SegmentInstance& a, const SegmentInstance& b,
                     const FundamentalInvariants& inv) {
  int na = a.seg.l * datum(inv, a.cuspidal).m;
  int nb = b.seg.l * datum(inv, b.cuspidal).m;
  return gamma_factor_factored(LeviShape({na, nb}));
}

}  // namespace

QFactored mu_pair_constant_factored(const SegmentInstance& a, const SegmentInstance& b,
                                    const FundamentalInvariants& inv) {
  long long ll = pair_conductor_multiplier(a, b);
  long long f = a.cuspidal == b.cuspidal ? resolved_conductor(datum(inv, a.cuspidal))
                                         : inv.cross_conductor(a.cuspidal, b.cuspidal);
  return pair_gamma(a, b, inv).pow(2) * QFactored::q_pow(HalfInt(ll * f));
}

FactoredFn mu_pair(const SegmentInstance& a, const SegmentInstance& b,
                   const FundamentalInvariants& inv) {
  if (a.torus == b.torus) throw InputError("paired segments need distinct torus coordinates");
  FactoredFn out(mu_pair_constant_factored(a, b, inv).expand());
  if (a.cuspidal != b.cuspidal) return out;
  const CuspidalDatum& c = datum(inv, a.cuspidal);
  HalfInt ga = a.seg.g(), gb = b.seg.g();
  HalfInt lo = ga < gb ? gb - ga : ga - gb;
  HalfInt hi = ga + gb;
  for (HalfInt g = lo; g <= hi; g += HalfInt(1)) {
    out.push_abs_sq(a.torus, b.torus, g * c.r, 1);
    out.push_abs_sq(a.torus, b.torus, -(g + HalfInt(1)) * c.r, -1);
  }
  return out;
}

HalfInt conductor_pair(const SegmentInstance& a, const SegmentInstance& b,
                       const FundamentalInvariants& inv) {
  long long ll = pair_conductor_multiplier(a, b);
  if (a.cuspidal != b.cuspidal) return HalfInt(ll * inv.cross_conductor(a.cuspidal, b.cuspidal));
  const CuspidalDatum& c = datum(inv, a.cuspidal);
  long long f = resolved_conductor(c);
  long long min_l = std::min(a.seg.l, b.seg.l);
  return HalfInt(ll * f + c.r * (ll - min_l));
}

FactoredFn mu_levi(std::span<const SegmentInstance> segs, const FundamentalInvariants& inv) {
  FactoredFn out;
  for (size_t i = 0; i < segs.size(); ++i)
    for (size_t j = i + 1; j < segs.size(); ++j) out *= mu_pair(segs[i], segs[j], inv);
  return out;
}

FactoredFn j_function(std::span<const SegmentInstance> segs, const FundamentalInvariants& inv) {
  if (segs.empty()) throw InputError("j-function needs at least one segment");
  for (const auto& s : segs)
    if (s.cuspidal != segs.front().cuspidal)
      throw MixedCuspidalError("j-function is defined on a single cuspidal block");
  const CuspidalDatum& c = datum(inv, segs.front().cuspidal);
  long long f = resolved_conductor(c);
  long long lgamma = 0;
  for (size_t i = 0; i < segs.size(); ++i)
    for (size_t j = i + 1; j < segs.size(); ++j)
      lgamma += static_cast<long long>(segs[i].seg.l) * segs[j].seg.l;
  FactoredFn out(QRatio::q_pow(HalfInt(-lgamma * f)));
  for (size_t i = 0; i < segs.size(); ++i)
    for (size_t j = i + 1; j < segs.size(); ++j) {
      HalfInt ga = segs[i].seg.g(), gb = segs[j].seg.g();
      HalfInt lo = ga < gb ? gb - ga : ga - gb;
      HalfInt hi = ga + gb;
      for (HalfInt g = lo; g <= hi; g += HalfInt(1)) {
        out.push_abs_sq(segs[i].torus, segs[j].torus, -(g + HalfInt(1)) * c.r, 1);
        out.push_abs_sq(segs[i].torus, segs[j].torus, g * c.r, -1);
      }
    }
  return out;
}

}  // namespace planch
