#pragma once

// Parameter families, trace specialization, and normalization of the raw
// Markov trace into the two link invariants, plus the invariant-level
// predicates (cubical support, chirality evidence).

#include <optional>
#include <string>

#include "cubic/braid.hpp"
#include "cubic/mpoly.hpp"

namespace cubic {

// A family of admissible trace parameters. Both satisfy the K_3 trace
// equations identically (verified once at first use).
struct ParameterSet {
  Family family;
  // substitution realizing the family on polynomials in a, b, z, t
  std::map<std::string, RatFn> bind;
  RatFn z, zbar, t;
  PrincipalModulus modulus;

  static const ParameterSet& type1();  // rational in (a, b), modulus H
  static const ParameterSet& type2();  // rational in (z, d), modulus P
  static const ParameterSet& of(Family f) { return f == Family::TypeI ? type1() : type2(); }
};

// raw trace of a braid word, exact in Z[a,b,z,t]
MPoly trace_raw_of(const BraidWord& w, long step_budget = 1000000);

// Type I: the genuine polynomial u^{-(n-1)} T in Z[a,b].
MPoly rescale_type1(const MPoly& raw, int strands);
// Type II: Laurent value in (z, d); throws NotLaurentError on non-monomial
// denominators (which would contradict the family's value ring).
MPoly specialize_type2(const MPoly& raw);

struct InvariantValue {
  Family family;
  std::string braid_text;
  int strands;
  long e;
  int components;
  int epsilon;
  Rat exp_z;     // power of z (type I: of z_0) in the normalization
  Rat exp_zbar;  // power of zbar (type I: of zbar_0 = -t_0)
  bool integral; // both exponents integral (odd-component closures)
  MPoly t_tilde;        // type I rescaled trace in Z[a,b]
  MPoly laurent_value;  // type II normalized value (only when integral)
};

InvariantValue normalize_invariant(const MPoly& raw, const BraidWord& w, const ParameterSet& p);
InvariantValue invariant_of(const BraidWord& w, Family f, long step_budget = 1000000);

enum class Specialization { Alpha0, Beta0, TypeII };

struct SpecializedInvariant {
  Specialization which;
  std::string variable;       // "a", "b", or "z,d"
  MPoly value;                // unreduced Laurent representative
  MPoly canonical_remainder;  // of value * mainvar^shift
  int shift;
  MPoly modulus;
  std::string main_var;
};

SpecializedInvariant invariant_specialized(const BraidWord& w, Specialization which,
                                           long step_budget = 1000000);

struct CubicalReport {
  bool pass = true;
  std::string detail;  // offending monomial on failure
};

CubicalReport cubical_support(const InvariantValue& v);
CubicalReport cubical_support(const SpecializedInvariant& si);

enum class Chirality { ChiralEvidence, Inconclusive };
Chirality chirality_test(const BraidWord& w, long step_budget = 1000000);

std::string to_json(const InvariantValue& v, const SpecializedInvariant* spec);

}  // namespace cubic
