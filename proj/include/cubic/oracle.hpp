#pragma once

// Independent small-rank verification of the rule table: the W_n spanning
// sets, the 21-dimensional regular representation of K_3, matrix-level
// relation checks, and the randomized-vs-canonical confluence test.

#include <random>
#include <string>
#include <vector>

#include "cubic/braid.hpp"
#include "cubic/mpoly.hpp"
#include "cubic/words.hpp"

namespace cubic {

struct SpanningSet {
  int level;
  std::vector<PositiveWord> words;
};

// W_0 = {1}, W_{n+1} = W_n + W_n b_{n+1} Z_n + W_n b_{n+1}^2 Z_n with
// Z_n = { b_n^{i0} b_{n-1}^{i1} ... b_{n-p}^{ip} }, i0 in {0,1,2},
// i1..ip in {1,2}. |W_2| = 21 = dim K_3.
SpanningSet enumerate_W(int n);

// 21x21 matrices of b_1, b_2 acting on the W_2 basis of K_3, symbolic in a, b.
struct RegularRep {
  int dim;
  std::vector<PositiveWord> basis;
  std::vector<std::vector<MPoly>> mat_b1, mat_b2;  // column j = image of basis j
};

RegularRep build_regular_rep_K3();

struct CheckResult {
  std::string name;
  bool pass;
  bool expected_failure = false;  // set for the printed-variant specimen
  std::string witness;
};

struct OracleReport {
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::string to_json() const;
};

// Q(rho(b_i)) = 0, braid relation, rho(R0) = rho(R1) = rho(R2) = 0, the
// structural C12/C21 identities, and the printed C21 variant (which must
// fail at random numeric points; recorded as an expected failure).
OracleReport verify_algebra_relations(const RegularRep& rep, uint64_t seed = 1);

// engine normal forms in B_3 against the regular representation
OracleReport rank3_soundness(int trials, int maxlen, uint64_t seed);

struct ConfluenceReport {
  int trials = 0;
  int disagreements = 0;
  std::vector<std::string> witnesses;
  std::string to_json() const;
};

// Random positive words in B_n reduced by the canonical and by a randomized
// strategy; the two traces must agree on both family moduli at `points`
// random prime-field parameter points.
ConfluenceReport randomized_confluence_check(int n, int trials, int maxlen, uint64_t seed,
                                             int points = 3);

}  // namespace cubic
