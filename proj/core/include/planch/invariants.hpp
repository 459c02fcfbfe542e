#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planch/halfint.hpp"
#include "planch/qratio.hpp"

namespace planch {

// How the formal degree of a cuspidal is supplied.
enum class FdMode { Unset, Exact, Derive, Numeric };

struct FormalDegreeSpec {
  FdMode mode = FdMode::Unset;
  QRatio exact;         // Exact mode
  double numeric = 0.0;  // Numeric mode

  static FormalDegreeSpec exact_value(QRatio x) { return {FdMode::Exact, std::move(x), 0.0}; }
  static FormalDegreeSpec derive() { return {FdMode::Derive, QRatio::one(), 0.0}; }
  static FormalDegreeSpec numeric_value(double v) { return {FdMode::Numeric, QRatio::one(), v}; }
};

// Fundamental data of one inertial cuspidal block: the cuspidal sits on
// GL(m), occurs with exponent e (so the block contributes m*e to n), has
// torsion number r dividing m, and carries a formal degree plus conductor
// data. delta is the discriminant-type exponent from which the self-conductor
// derives as delta + m^2 - r.
struct CuspidalDatum {
  int m = 1;
  int e = 1;
  int r = 1;
  FormalDegreeSpec d;
  std::optional<HalfInt> delta;
  std::optional<long long> f_self;
};

// Everything a Bernstein component needs: residue cardinality q, the
// cuspidal blocks, and the symmetric matrix of cross conductors f(sigma_i,
// sigma_j) for i != j (diagonal entries are ignored and must be zero).
struct FundamentalInvariants {
  long long q = 2;
  std::vector<CuspidalDatum> cuspidals;
  std::vector<std::vector<long long>> cross_conductors;

  int total_n() const;
  long long cross_conductor(int i, int j) const;
};

struct Violation {
  std::string code;
  std::string message;
  int cuspidal = -1;  // index, or -1 for global problems
};

// Total validation: collects every violation instead of throwing.
// Codes: Q_RANGE, M_POSITIVE, E_POSITIVE, R_POSITIVE, R_DIVIDES_M,
// D_NUMERIC_RANGE, D_MISSING, DELTA_NEGATIVE, DELTA_NOT_REPRESENTABLE,
// F_SELF_NEGATIVE, CONDUCTOR_IDENTITY, CROSS_SHAPE, CROSS_SYMMETRY,
// CROSS_DIAGONAL.
std::vector<Violation> validate(const FundamentalInvariants& inv);

// Self-conductor from the discriminant exponent: delta + m^2 - r.
// MissingDataError when delta is absent.
HalfInt derive_conductor(const CuspidalDatum& c);

// f_self if given, else derived from delta; must be integral.
long long resolved_conductor(const CuspidalDatum& c);

// Formal degree of the cuspidal itself from its discriminant exponent:
// r * (q^m - 1)/(q^r - 1) * q^{(r - m + delta)/2} * deg(St(m)).
QRatio derive_formal_degree(const CuspidalDatum& c);

// ([E:F]^2 / m^2) * delta for the degree-deg_e unramified parameter field.
BigRat discriminant_exponent(const CuspidalDatum& c, int deg_e);

}  // namespace planch
