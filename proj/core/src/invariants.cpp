#include "planch/invariants.hpp"

#include "planch/degrees.hpp"

namespace planch {

int FundamentalInvariants::total_n() const {
  int n = 0;
  for (const auto& c : cuspidals) n += c.m * c.e;
  return n;
}

long long FundamentalInvariants::cross_conductor(int i, int j) const {
  if (i == j) throw InputError("cross conductors are defined for distinct cuspidals");
  if (i < 0 || j < 0 || i >= static_cast<int>(cross_conductors.size()) ||
      j >= static_cast<int>(cross_conductors[i].size()))
    throw MissingDataError("cross conductor matrix does not cover the requested pair");
  return cross_conductors[i][j];
}

std::vector<Violation> validate(const FundamentalInvariants& inv) {
  std::vector<Violation> v;
  auto add = [&](std::string code, std::string msg, int idx = -1) {
    v.push_back({std::move(code), std::move(msg), idx});
  };
  if (inv.q < 2) add("Q_RANGE", "residue cardinality q must be at least 2");
  for (int i = 0; i < static_cast<int>(inv.cuspidals.size()); ++i) {
    const CuspidalDatum& c = inv.cuspidals[i];
    if (c.m < 1) add("M_POSITIVE", "cuspidal degree m must be >= 1", i);
    if (c.e < 1) add("E_POSITIVE", "exponent e must be >= 1", i);
    if (c.r < 1) add("R_POSITIVE", "torsion number r must be >= 1", i);
    if (c.m >= 1 && c.r >= 1 && c.m % c.r != 0)
      add("R_DIVIDES_M", "torsion number must divide the cuspidal degree", i);
    if (c.d.mode == FdMode::Numeric && c.d.numeric <= 0)
      add("D_NUMERIC_RANGE", "numeric formal degree must be positive", i);
    if (c.d.mode == FdMode::Derive && !c.delta)
      add("D_MISSING", "derive mode for the formal degree needs the discriminant exponent", i);
    if (c.delta) {
      if (*c.delta < HalfInt(0)) add("DELTA_NEGATIVE", "discriminant exponent must be nonnegative", i);
      if (!c.delta->is_integer())
        add("DELTA_NOT_REPRESENTABLE",
            "discriminant exponent must be an integer to keep all q-exponents half-integral", i);
    }
    if (c.f_self && *c.f_self < 0) add("F_SELF_NEGATIVE", "self-conductor must be nonnegative", i);
    if (c.f_self && c.delta && c.delta->is_integer()) {
      long long derived = c.delta->integer() + static_cast<long long>(c.m) * c.m - c.r;
      if (*c.f_self != derived)
        add("CONDUCTOR_IDENTITY",
            "self-conductor disagrees with delta + m^2 - r = " + std::to_string(derived), i);
    }
  }
  int t = static_cast<int>(inv.cuspidals.size());
  const auto& cc = inv.cross_conductors;
  bool shape_ok = static_cast<int>(cc.size()) == t;
  for (const auto& row : cc) shape_ok = shape_ok && static_cast<int>(row.size()) == t;
  if (t > 1 || !cc.empty()) {
    if (!shape_ok) {
      add("CROSS_SHAPE", "cross conductor matrix must be square of size equal to the cuspidal count");
    } else {
      for (int i = 0; i < t; ++i) {
        if (cc[i][i] != 0) add("CROSS_DIAGONAL", "cross conductor diagonal entries must be zero", i);
        for (int j = i + 1; j < t; ++j)
          if (cc[i][j] != cc[j][i]) add("CROSS_SYMMETRY", "cross conductor matrix must be symmetric");
      }
    }
  }
  return v;
}

HalfInt derive_conductor(const CuspidalDatum& c) {
  if (!c.delta) throw MissingDataError("conductor derivation needs the discriminant exponent");
  return *c.delta + HalfInt(static_cast<long long>(c.m) * c.m - c.r);
}

long long resolved_conductor(const CuspidalDatum& c) {
  if (c.f_self) return *c.f_self;
  return derive_conductor(c).integer();
}

QRatio derive_formal_degree(const CuspidalDatum& c) {
  return fd_generalized_steinberg_exact(c, 1).expand();
}

BigRat discriminant_exponent(const CuspidalDatum& c, int deg_e) {
  if (deg_e < 1 || c.m % deg_e != 0)
    throw InputError("parameter field degree must divide the cuspidal degree");
  if (!c.delta) throw MissingDataError("discriminant exponent derivation needs delta");
  BigRat delta(c.delta->twice(), 2);
  return BigRat(static_cast<long long>(deg_e) * deg_e, static_cast<long long>(c.m) * c.m) * delta;
}

}  // namespace planch
