#pragma once

#include "planch/groupdata.hpp"
#include "planch/mu.hpp"
#include "planch/scalar.hpp"

namespace planch {

// One orbifold component of the tempered dual: a partition of each
// cuspidal exponent. Segments are kept in canonical order (cuspidal index,
// then non-increasing length) with torus coordinates numbered along it.
struct ComponentSpec {
  FundamentalInvariants inv;
  std::vector<Partition> partitions;
  std::vector<SegmentInstance> segments;

  ComponentSpec() = default;
  ComponentSpec(FundamentalInvariants inv, std::vector<Partition> partitions);

  // "2+1" for one cuspidal, "2+1|3" across blocks.
  std::string selector() const;
  LeviShape levi() const;
};

// Cartesian product of the partition lists of every cuspidal exponent,
// last block varying fastest; deterministic catalog order.
std::vector<ComponentSpec> enumerate_components(const FundamentalInvariants& inv);

// The Plancherel density of one component, split into its exact
// ingredients:
//
//   d nu = constant * formal_degree * prod(factors) * d omega.
//
// constant is the scalar of c^{-2} gamma^{-1} mu (conductor powers times
// the gamma factor of the full Levi); factors are the surviving
// squared-modulus torus factors; mu is the assembled mu-function itself.
// canonical_mass = prod l_i m_i / r_i is the total mass of d omega, and
// effective_quotient_order the number of Weyl relabelings a generic orbit
// admits (the part of the component group that acts by permuting equal
// segments). centralizer_order is the full isotropy order including
// cyclic rotations of each segment.
struct DensityReport {
  std::string selector;
  LeviShape levi;
  int torus_dim = 0;
  QRatio constant;
  std::vector<TorusFactor> factors;
  FactoredFn mu;
  Scalar formal_degree;
  BigRat canonical_mass;
  unsigned long long effective_quotient_order = 1;
  unsigned long long centralizer_order = 1;
};

DensityReport density(const ComponentSpec& spec);

// Component spec of the unramified (Iwahori) type of GL(n): one cuspidal
// block with m = r = 1, conductor zero, formal degree one.
ComponentSpec iwahori_component(int n, long long q, const Partition& p);

// Density of the Iwahori component scaled to the Hecke-algebra
// normalization vol(I) = 1/P_{S_n}(q). Assembled structurally and compared
// against the closed product form
//   prod_i q^{(l_i^2-l_i)/2} (q-1)^{l_i} / (l_i (q^{l_i}-1)) * q^{(n-n^2)/2};
// the two must match exactly and both are returned.
struct HeckeDensity {
  DensityReport report;
  QRatio explicit_constant;  // closed form of constant * formal_degree
};
HeckeDensity hecke_density(int n, const Partition& p, long long q = 2);

// Macdonald's spherical density shape for the all-ones component:
// prod_{i<j} |1 - z_j/z_i|^2 / |1 - z_j/z_i q^{-1}|^2 with unit scalar.
// Built directly from that display, independently of the mu layer.
FactoredFn macdonald_form(int n);

// Mass of the component under its Plancherel density:
//   (constant * formal_degree / effective_quotient_order) * canonical_mass
//     * mean of prod(factors) over the grid_n^k lattice in T^k.
// The factors depend only on coordinate ratios, so the lattice mean is
// taken with one coordinate pinned; this equals the full tensor-trapezoid
// mean exactly. SingularityError when q_val <= 1.
double integrate(const ComponentSpec& spec, double q_val, int grid_n);

}  // namespace planch
