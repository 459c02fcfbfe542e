#pragma once

#include <string>
#include <vector>

#include "planch/density.hpp"
#include "planch/verify.hpp"

namespace planch {

// Input document:
//
//   {
//     "q": 3,
//     "cuspidals": [
//       {"m": 2, "e": 2, "r": 2, "d": "derive", "delta": 2, "f_self": 5}
//     ],
//     "cross_conductors": [[0]]
//   }
//
// "d" is "derive", a number (a numerical formal degree), or an expression
// string such as "(q-1)/2"; omitted means unset. "delta" is an integer or a
// half-integer string like "3/2"; "delta" and "f_self" are each optional.
// "cross_conductors" may be omitted when it would be all zero. Unknown keys
// and malformed values raise ParseError; semantic checks are validate()'s
// job, not the parser's.
FundamentalInvariants parse_invariants_json(const std::string& text);
std::string render_invariants_json(const FundamentalInvariants& inv, bool pretty = false);

// Component catalog: selector, Levi shape, torus dimension, canonical mass
// and quotient data for every component, in enumeration order. Needs no
// formal degrees.
std::string components_json(const FundamentalInvariants& inv, bool pretty = false);

// Full density report. Torus factors are serialized in the normalized
// mirror-paired form, one entry per squared modulus |1 - z_j/z_i q^a|^{2e}
// with a <= 0, the folded shift absorbed into "constant":
//
//   {"i": 1, "j": 2, "q_exp": "-3/2", "exp": 1}
//
// Coordinates are 1-based. "formal_degree" is an expression string when the
// value is exact and a number otherwise. "mu_constant" and "mu_display"
// carry the normalized mu-function alongside the density data.
std::string density_report_json(const DensityReport& rep, bool pretty = false);

// The evaluatable core of a serialized report, for round trips.
struct ParsedDensity {
  QRatio constant;
  Scalar formal_degree;
  std::vector<TorusFactor> factors;
};
ParsedDensity parse_density_json(const std::string& text);

std::string verify_report_json(const std::vector<SuiteResult>& results, bool pretty = false);

}  // namespace planch
