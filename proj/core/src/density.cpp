#include "planch/density.hpp"

#include <complex>
#include <numbers>
#include <sstream>
#include <utility>

#include "planch/degrees.hpp"
#include "planch/errors.hpp"

namespace planch {

namespace {

std::vector<SegmentInstance> build_segments(const FundamentalInvariants& inv,
                                            const std::vector<Partition>& partitions) {
  if (partitions.size() != inv.cuspidals.size())
    throw InputError("need exactly one partition per cuspidal datum");
  std::vector<SegmentInstance> segs;
  int torus = 0;
  for (std::size_t i = 0; i < partitions.size(); ++i) {
    if (partitions[i].total() != inv.cuspidals[i].e) {
      std::ostringstream os;
      os << "partition of cuspidal " << i << " sums to " << partitions[i].total()
         << ", expected e = " << inv.cuspidals[i].e;
      throw InputError(os.str());
    }
    for (int l : partitions[i].parts) {
      segs.push_back({static_cast<int>(i), Segment(l), torus});
      ++torus;
    }
  }
  return segs;
}

}  // namespace

ComponentSpec::ComponentSpec(FundamentalInvariants inv_in, std::vector<Partition> partitions_in)
    : inv(std::move(inv_in)), partitions(std::move(partitions_in)) {
  segments = build_segments(inv, partitions);
}

std::string ComponentSpec::selector() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < partitions.size(); ++i) {
    if (i > 0) os << '|';
    for (std::size_t j = 0; j < partitions[i].parts.size(); ++j) {
      if (j > 0) os << '+';
      os << partitions[i].parts[j];
    }
  }
  return os.str();
}

LeviShape ComponentSpec::levi() const {
  std::vector<int> blocks;
  blocks.reserve(segments.size());
  for (const auto& s : segments) blocks.push_back(s.seg.l * inv.cuspidals[s.cuspidal].m);
  return LeviShape(std::move(blocks));
}

std::vector<ComponentSpec> enumerate_components(const FundamentalInvariants& inv) {
  std::vector<std::vector<Partition>> lists;
  lists.reserve(inv.cuspidals.size());
  for (const auto& c : inv.cuspidals) lists.push_back(partitions_of(c.e));

  std::vector<ComponentSpec> out;
  std::vector<std::size_t> idx(lists.size(), 0);
  while (true) {
    std::vector<Partition> choice;
    choice.reserve(lists.size());
    for (std::size_t i = 0; i < lists.size(); ++i) choice.push_back(lists[i][idx[i]]);
    out.emplace_back(inv, std::move(choice));
    int i = static_cast<int>(lists.size()) - 1;
    while (i >= 0 && ++idx[i] == lists[i].size()) {
      idx[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

DensityReport density(const ComponentSpec& spec) {
  const auto& inv = spec.inv;
  const auto& segs = spec.segments;

  DensityReport rep;
  rep.selector = spec.selector();
  rep.levi = spec.levi();
  rep.torus_dim = static_cast<int>(segs.size());

  rep.mu = mu_levi(segs, inv);
  rep.factors = rep.mu.factors();

  // gamma(G|M) on the Levi of the segment blocks, times one conductor power
  // per unordered pair of segments. The c^{-2} gamma^{-1} prefactor of the
  // Plancherel formula cancels the pair gammas inside mu down to exactly
  // this product.
  QFactored cst = gamma_factor_factored(rep.levi);
  long long ftot = 0;
  for (std::size_t a = 0; a < segs.size(); ++a)
    for (std::size_t b = a + 1; b < segs.size(); ++b) {
      long long f = segs[a].cuspidal == segs[b].cuspidal
                        ? resolved_conductor(inv.cuspidals[segs[a].cuspidal])
                        : inv.cross_conductor(segs[a].cuspidal, segs[b].cuspidal);
      ftot += static_cast<long long>(segs[a].seg.l) * segs[b].seg.l * f;
    }
  cst *= QFactored::q_pow(HalfInt(ftot));
  rep.constant = cst.expand();

  std::vector<Scalar> fds;
  fds.reserve(segs.size());
  for (const auto& s : segs)
    fds.push_back(fd_generalized_steinberg(inv.cuspidals[s.cuspidal], s.seg.l, inv.q));
  rep.formal_degree = fd_product(fds, inv.q);

  rep.canonical_mass = BigRat(1);
  for (const auto& s : segs) {
    const auto& c = inv.cuspidals[s.cuspidal];
    rep.canonical_mass *= BigRat(static_cast<long long>(s.seg.l) * c.m, c.r);
  }

  rep.effective_quotient_order = 1;
  rep.centralizer_order = 1;
  for (const auto& p : spec.partitions) {
    CentralizerData cd = centralizer_data(p);
    rep.effective_quotient_order *= cd.effective;
    rep.centralizer_order *= cd.order;
  }
  return rep;
}

ComponentSpec iwahori_component(int n, long long q, const Partition& p) {
  if (n < 1) throw InputError("group rank must be positive");
  if (p.total() != n) {
    std::ostringstream os;
    os << "partition sums to " << p.total() << ", expected " << n;
    throw InputError(os.str());
  }
  CuspidalDatum c;
  c.m = 1;
  c.e = n;
  c.r = 1;
  c.d = FormalDegreeSpec::derive();
  c.delta = HalfInt(0);
  c.f_self = 0;
  FundamentalInvariants inv;
  inv.q = q;
  inv.cuspidals = {c};
  inv.cross_conductors = {{0}};
  return ComponentSpec(std::move(inv), {p});
}

HeckeDensity hecke_density(int n, const Partition& p, long long q) {
  ComponentSpec spec = iwahori_component(n, q, p);
  DensityReport rep = density(spec);
  rep.constant *= iwahori_volume(n);

  QFactored ex = QFactored::q_pow(HalfInt::from_twice(static_cast<long long>(n) - static_cast<long long>(n) * n));
  for (int l : p.parts) {
    ex *= QFactored::q_pow(HalfInt::from_twice(static_cast<long long>(l) * l - l));
    ex *= QFactored::q_pow_minus_one(1, l);
    ex = ex / QFactored::from_rational(BigRat(l));
    ex = ex / QFactored::q_pow_minus_one(l, 1);
  }
  QRatio explicit_constant = ex.expand();

  QRatio structural = rep.constant * rep.formal_degree.exact();
  if (!(structural == explicit_constant))
    throw Error("internal: Hecke density closed form disagrees with the assembled density");
  return {std::move(rep), std::move(explicit_constant)};
}

FactoredFn macdonald_form(int n) {
  if (n < 1) throw InputError("n must be >= 1");
  FactoredFn f;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      f.push_abs_sq(i, j, HalfInt(0), 1);
      f.push_abs_sq(i, j, HalfInt(-1), -1);
    }
  ComponentSpec spec = iwahori_component(n, 2, Partition(std::vector<int>(n, 1)));
  FactoredFn mu = mu_levi(spec.segments, spec.inv);
  if (mu.factors() != f.factors())
    throw Error("internal: Macdonald factors do not match the unramified component");
  return f;
}

double integrate(const ComponentSpec& spec, double q_val, int grid_n) {
  if (q_val <= 1.0) throw SingularityError("integration needs q > 1");
  if (grid_n < 8) throw InputError("grid size must be at least 8");

  DensityReport rep = density(spec);
  double scalar_part = rep.constant.eval_at_q(q_val) * rep.formal_degree.eval_at_q(q_val) /
                       static_cast<double>(rep.effective_quotient_order) *
                       rat_double(rep.canonical_mass);

  std::vector<std::complex<double>> roots(grid_n);
  for (int t = 0; t < grid_n; ++t)
    roots[t] = std::polar(1.0, 2.0 * std::numbers::pi * t / grid_n);

  // The factors only couple segments on a common cuspidal block, so the
  // lattice mean factorizes block by block; within a block they depend on
  // coordinate ratios alone, so pinning one coordinate and averaging over
  // the grid_n^{k-1} sublattice reproduces the full tensor-trapezoid mean
  // exactly (the grid is a group and the integrand is diagonal-invariant).
  double avg = 1.0;
  for (std::size_t ci = 0; ci < spec.inv.cuspidals.size(); ++ci) {
    std::vector<int> local_of(spec.segments.size(), -1);
    int kb = 0;
    for (const auto& s : spec.segments)
      if (s.cuspidal == static_cast<int>(ci)) {
        local_of[s.torus] = kb;
        ++kb;
      }
    if (kb < 2) continue;

    FactoredFn block;
    for (const auto& tf : rep.factors)
      if (local_of[tf.zi] >= 0 && local_of[tf.zj] >= 0)
        block.push({local_of[tf.zi], local_of[tf.zj], tf.a, tf.e});
    if (block.factors().empty()) continue;

    std::vector<int> idx(kb - 1, 0);
    std::vector<std::complex<double>> z(kb);
    z[0] = 1.0;
    double sum = 0.0;
    unsigned long long count = 0;
    while (true) {
      for (int t = 0; t + 1 < kb; ++t) z[t + 1] = roots[idx[t]];
      sum += block.eval_real(q_val, z);
      ++count;
      int t = kb - 2;
      while (t >= 0 && ++idx[t] == grid_n) {
        idx[t] = 0;
        --t;
      }
      if (t < 0) break;
    }
    avg *= sum / static_cast<double>(count);
  }
  return scalar_part * avg;
}

}  // namespace planch
