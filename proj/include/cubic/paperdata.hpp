#pragma once

// Literal polynomial data for the two cubic-skein invariants: the skein
// coefficient table, the replacement sums for the C-moves, the two family
// moduli, the commutativity polynomials and the factored obstruction
// values they must reproduce.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "cubic/mpoly.hpp"

namespace cubic::paperdata {

// Variables: a, b are the two skein parameters; z, t the trace parameters;
// d the second variable of the type II family.

// coefficient table A..P (indexed by tag character, no J/K)
const MPoly& table1(char tag);
const std::map<char, MPoly>& table1_all();

// documentation only: the auxiliary square root appearing beside the table
std::string table_aux_w();

struct ShapeTerm {
  std::vector<std::pair<int, int>> factors;  // (0 = low letter, 1 = high letter, exponent)
  char tag;                                  // Table-1 coefficient
};

// The 21-term tail R of h l^2 h + R = 0; the C2 move rewrites h l^2 h to -R.
const std::vector<ShapeTerm>& c2_tail();

// C21 replacement variant as printed in the rules section (its alpha term
// carries h^2 l^2 h^2); kept only as an expected-failure specimen.
struct CoeffShape {
  std::vector<std::pair<int, int>> factors;
  MPoly coeff;
};
const std::vector<CoeffShape>& c21_variant_printed();
const std::vector<CoeffShape>& c21_identity();  // the structural identity the engine uses
const std::vector<CoeffShape>& c12_identity();

// family moduli
const MPoly& h_modulus();  // degree 6 in a, leading coefficient 8
const MPoly& p_modulus();  // degree 7 in d, leading coefficient 1

// commutativity polynomials in a, b, z, t
const MPoly& comm_L();
const MPoly& comm_M();
const MPoly& comm_N();

// printed quadratic trace system (first from T(R0) = 0, second from T(R1) = 0)
const MPoly& trace_eq0();
const MPoly& trace_eq1();

// obstruction factor data
const MPoly& W_poly();              // a^3 + 8 - b^3 + 6ab
const MPoly& W_poly_factored();     // (a+2-b)(a^2-2a+4+ab+2b+b^2)
const MPoly& Z_poly();              // in z, b
const MPoly& B_poly(int i);         // B_1 .. B_14, in z, b

// type I factored CPC values: label -> prefactor g with obstruction u^3 g H W
struct TypeIFactored {
  std::string label;
  MPoly prefactor;  // zero polynomial means "trivial"
};
const std::vector<TypeIFactored>& cpc_type1_factored();

// type II factored CPC values:
//   label -> sign * Z * b^bpow * prod B_i / (z^zpow (zb+1)^wpow)
struct TypeIIFactored {
  std::string label;
  int sign;  // 0 means "trivial"
  std::vector<int> b_indices;
  int bpow;
  int zpow;
  int wpow;
};
const std::vector<TypeIIFactored>& cpc_type2_factored();

// type I/II factored commutativity values (same conventions)
struct LmnFactored {
  MPoly type1_prefactor;  // value is u^2 * prefactor * H
  int type2_sign;
  int type2_b;  // single B index
  int type2_zpow, type2_wpow;
};
const std::array<LmnFactored, 3>& lmn_factored();  // order L, M, N

// identities among type I obstructions: (lhs) == multiplier * (rhs)
struct CpcIdentity {
  std::string lhs, rhs;
  MPoly multiplier;
};
const std::vector<CpcIdentity>& cpc_identities();

// basis of H(Q,3) (documentation; the engine never uses it)
const std::vector<std::string>& hq3_basis_words();

}  // namespace cubic::paperdata
