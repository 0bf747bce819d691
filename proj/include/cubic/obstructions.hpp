#pragma once

// The obstruction computations: the 24 CPC couples in B_4, the three
// commutativity polynomials, the quadratic trace system, and the link
// between the type II modulus and the Z polynomial.

#include <string>
#include <vector>

#include "cubic/braid.hpp"
#include "cubic/invariants.hpp"
#include "cubic/mpoly.hpp"

namespace cubic {

struct CpcCouple {
  std::string label;  // "s.i"
  BraidWord left, right;
};

// the six exponent patterns crossed with P_1..P_4 / P_1'..P_4'
std::vector<CpcCouple> cpc_couples();

struct CpcResult {
  std::string label;
  Family family;
  bool divisible = false;
  bool trivial = false;        // the difference vanished syntactically
  int cleared_power = 0;       // power of (ab+4) (type I) cleared
  long degree = 0;             // total degree of the cleared difference
  long expected_degree = -1;   // from the printed factored form, when listed
  bool degree_match = true;
  MPoly cleared;               // the cleared polynomial difference
};

// trace_raw(left) - trace_raw(right), specialized, cleared, tested against
// the family modulus. Throws on divisibility failure.
CpcResult cpc_obstruction(const CpcCouple& c, Family f, long step_budget = 1000000);

struct SuiteReport {
  std::vector<std::string> lines;
  bool pass = true;
  void check(bool ok, const std::string& what) {
    lines.push_back(std::string(ok ? "pass  " : "FAIL  ") + what);
    pass = pass && ok;
  }
};

// all 24 couples for one family, plus the printed identities among the
// type I obstructions; parallel over couples
SuiteReport cpc_suite(Family f, int jobs = 1, long step_budget = 1000000);

// L, M, N specialize to the printed factored forms, exactly
SuiteReport lmn_identity_check(Family f);

// engine-computed trace conditions against the printed quadratic system
std::pair<MPoly, MPoly> trace_equations_R0R1();
SuiteReport trace_equation_suite();

// P^(z,d) with d = z^2 (b z + 1) equals Z(z, b) exactly
bool zp_identity_check();

// two-pass transcription checks on the literal obstruction data
SuiteReport transcription_checks();

}  // namespace cubic
