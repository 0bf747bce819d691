#include "cubic/paperdata.hpp"

namespace cubic::paperdata {

namespace {

std::map<char, MPoly> build_table1() {
  std::map<char, MPoly> t;
  t['A'] = parse_poly("b^2 - a");
  t['B'] = parse_poly("a^2 - a*b^2 - b");
  t['C'] = parse_poly("a^2 - a*b^2");
  t['D'] = parse_poly("1 + 2*a*b + a^2*b^2 - a^3");
  t['E'] = parse_poly("1 + a*b + a^2*b^2 - a^3");
  t['F'] = parse_poly("1 + 2*a*b - b^3");
  t['G'] = parse_poly("a*b^3 - 2*a - 2*a^2*b");
  t['H'] = parse_poly("a*b^3 - 2*a - 2*a^2*b + b^2");
  t['I'] = parse_poly("a^4 - a^3*b^2 - 2*a^2*b - 3*a");
  t['L'] = parse_poly("2*a^3*b + 3*a^2 - a^2*b^3 - a*b^2");
  t['M'] = parse_poly("b^4 - 2*b - 3*a*b^2 + a^2");
  t['N'] = parse_poly("1 + 4*a*b + 3*a^2*b^2 - a^3 - a*b^4 - b^3");
  t['O'] = parse_poly("1 + 3*a*b + 3*a^2*b^2 - a^3 - a*b^4");
  t['P'] = parse_poly("3*b^2 - b^5 - 2*a - 3*a^2*b + 4*a*b^3");
  return t;
}

}  // namespace

const std::map<char, MPoly>& table1_all() {
  static const std::map<char, MPoly> t = build_table1();
  return t;
}

const MPoly& table1(char tag) {
  auto it = table1_all().find(tag);
  if (it == table1_all().end())
    throw CubicError(std::string("table1: unknown tag ") + tag);
  return it->second;
}

std::string table_aux_w() { return "((a^2 + 2b) / (2a - b^2))^(1/2)"; }

const std::vector<ShapeTerm>& c2_tail() {
  // l = b_j, h = b_{j+1}; the relation is h l^2 h + (sum below) = 0
  static const std::vector<ShapeTerm> tail = {
      {{{0, 2}, {1, 2}, {0, 2}}, 'A'},
      {{{0, 1}, {1, 2}, {0, 2}}, 'B'},
      {{{0, 2}, {1, 2}, {0, 1}}, 'B'},
      {{{0, 2}, {1, 1}, {0, 2}}, 'C'},
      {{{0, 1}, {1, 2}, {0, 1}}, 'D'},
      {{{0, 1}, {1, 1}, {0, 2}}, 'E'},
      {{{0, 2}, {1, 1}, {0, 1}}, 'E'},
      {{{1, 2}, {0, 2}}, 'F'},
      {{{0, 2}, {1, 2}}, 'F'},
      {{{1, 1}, {0, 2}}, 'G'},
      {{{0, 2}, {1, 1}}, 'G'},
      {{{1, 2}, {0, 1}}, 'H'},
      {{{0, 1}, {1, 2}}, 'H'},
      {{{0, 1}, {1, 1}, {0, 1}}, 'I'},
      {{{1, 1}, {0, 1}}, 'L'},
      {{{0, 1}, {1, 1}}, 'L'},
      {{{0, 2}}, 'M'},
      {{{1, 2}}, 'M'},
      {{{0, 1}}, 'N'},
      {{{1, 1}}, 'O'},
      {{}, 'P'},
  };
  return tail;
}

const std::vector<CoeffShape>& c12_identity() {
  static const std::vector<CoeffShape> v = {
      {{{0, 2}, {1, 2}, {0, 1}}, parse_poly("1")},
      {{{1, 1}, {0, 2}, {1, 1}}, parse_poly("a")},
      {{{0, 1}, {1, 2}, {0, 1}}, parse_poly("0-a")},
      {{{1, 1}, {0, 2}}, parse_poly("b")},
      {{{1, 2}, {0, 1}}, parse_poly("0-b")},
  };
  return v;
}

const std::vector<CoeffShape>& c21_identity() {
  static const std::vector<CoeffShape> v = {
      {{{0, 1}, {1, 2}, {0, 2}}, parse_poly("1")},
      {{{1, 1}, {0, 2}, {1, 1}}, parse_poly("a")},
      {{{0, 1}, {1, 2}, {0, 1}}, parse_poly("0-a")},
      {{{0, 2}, {1, 1}}, parse_poly("b")},
      {{{0, 1}, {1, 2}}, parse_poly("0-b")},
  };
  return v;
}

const std::vector<CoeffShape>& c21_variant_printed() {
  // as displayed with the rewriting rules: the alpha term is h^2 l^2 h^2
  static const std::vector<CoeffShape> v = {
      {{{0, 1}, {1, 2}, {0, 2}}, parse_poly("1")},
      {{{1, 2}, {0, 2}, {1, 2}}, parse_poly("a")},
      {{{0, 1}, {1, 2}, {0, 1}}, parse_poly("0-a")},
      {{{0, 2}, {1, 1}}, parse_poly("b")},
      {{{0, 1}, {1, 2}}, parse_poly("0-b")},
  };
  return v;
}

const MPoly& h_modulus() {
  static const MPoly h = parse_poly(
      "8*a^6 - 8*a^5*b^2 + 2*a^4*b^4 + 36*a^4*b - 34*a^3*b^3 + 17*a^3 + 8*a^2*b^5 "
      "+ 32*a^2*b^2 - 36*a*b^4 + 38*a*b + 8*b^6 - 17*b^3 + 8");
  return h;
}

const MPoly& p_modulus() {
  static const MPoly p = parse_poly(
      "z^23 + z^18*d - 2*z^16*d^2 - z^14*d^3 - 2*z^9*d^4 + 2*z^7*d^5 + d^6*z^5 + d^7");
  return p;
}

const MPoly& comm_L() {
  static const MPoly v = parse_poly(
      "3*a*b^4 + 5*a^2*b^5 - 2*a*b + 2*a^4*b - 7*a^3*b^3 - 7*a^2*b^2 - a*b^7 + a^3"
      " + (13*a^3*b^2 - 10*a^2*b^4 + 13*a^2*b - 6*a*b^3 - 2*a^4 + 3*a + 2*a*b^6)*t"
      " + (0 - 6*a^3*b - a*b^5 - 6*a^2 + 3*a*b^2 + 5*a^2*b^3)*t^2"
      " + (0 - 16*a^4*b^2 - 5*a*b^2 - 2*a^2 + 3*a^5 + 2*a*b^5 - 13*a^3*b + 11*a^3*b^4"
      "   - 2*a^2*b^6)*z"
      " + (0 - 2*a*b^4 + 15*a^4*b + 2*a^2*b^5 - 11*a^3*b^3 + 15*a^3 + 6*a*b)*z*t"
      " + (0 - 3*a - a^3*b^5 + 6*a^4*b^3 - 3*a^3*b^2 + 2*a^2*b^4 - 9*a^5*b - 9*a^2*b"
      "   - 10*a^4)*z^2");
  return v;
}

const MPoly& comm_M() {
  static const MPoly v = parse_poly(
      "a - a^4 + 6*a^2*b - 2*a^5*b - 2*a*b^3 + 7*a^4*b^3 + 11*a^3*b^2 + a*b^6"
      " - 7*a^2*b^4 - 5*a^3*b^5 + a^2*b^7"
      " + (0 - 21*a^3*b - 2*a^2*b^6 + 2*a*b^2 + 14*a^2*b^3 - 13*a^4*b^2 - 7*a^2"
      "   + 10*a^3*b^4 - 2*a*b^5 + 2*a^5)*t"
      " + (0 - 7*a^2*b^2 + 6*a^4*b + 10*a^3 + a*b^4 + a^2*b^5 - 5*a^3*b^3)*t^2"
      " + (0 - 3*a^6 + 2*a^3*b^6 + 5*a*b + 11*a^2*b^2 + 16*a^5*b^2 + 8*a^3 + 25*a^4*b"
      "   - 11*a^4*b^4 - 4*a*b^4 - 10*a^3*b^3)*z"
      " + (11*a^4*b^3 - 14*a^2*b + 10*a^3*b^2 - a + 4*a*b^3 - 15*a^5*b - 27*a^4"
      "   - 2*a^3*b^5)*z*t"
      " + (4*a*b^2 - 4*a^2*b^3 + a^4*b^5 + 19*a^5 - a^3*b^4 + 4*a^2 - 3*a^4*b^2"
      "   + 21*a^3*b - 6*a^5*b^3 + 9*a^6*b)*z^2");
  return v;
}

const MPoly& comm_N() {
  static const MPoly v = parse_poly(
      "12*a^2*b^3 + a*b^8 - 6*a^2*b^6 - 2*a^2 + 3*a*b^2 + 11*a^3*b^4 - 4*a*b^5"
      " - 6*a^4*b^2 - 7*a^3*b"
      " + (0 - 21*a^3*b^3 + 7*a*b^4 + 5*a^3 + 10*a^4*b - 2*a*b^7 - 2*a*b - 17*a^2*b^2"
      "   + 12*a^2*b^5)*t"
      " + (0 - 4*a^4 + 10*a^3*b^2 - 3*a + a*b^6 + 5*a^2*b - 6*a^2*b^4 - 3*a*b^3)*t^2"
      " + (3*a + 3*a*b^3 + 2*a^2*b^7 + 16*a^3*b^2 - 2*a*b^6 - 7*a^4 - 13*a^5*b"
      "   + 5*a^2*b - 13*a^3*b^5 + 25*a^4*b^3)*z"
      " + (a^2 - 12*a^3*b + 10*a^5 + 13*a^3*b^4 - a^2*b^3 - 2*a^2*b^6 + 2*a*b^5"
      "   - 24*a^4*b^2 - 5*a*b^2)*z*t"
      " + (5*a^3 + 4*a^3*b^3 + 14*a^5*b^2 + 8*a^4*b + 7*a^2*b^2 + a^3*b^6 + 5*a*b"
      "   - 2*a^2*b^5 - 6*a^6 - 7*a^4*b^4)*z^2");
  return v;
}

const MPoly& trace_eq0() {
  static const MPoly v = parse_poly(
      "(0 - b^3 + 3*a*b + 4)*t^2 + (3*a^2 - 7*a*b^2 - 6*b + 2*b^4)*t"
      " + (3*b^2 - b^5 - 2*a - 3*a^2*b + 4*a*b^3)"
      " + (2*a*b^3 + b^2 - 6*a^2*b - 10*a)*z*t"
      " + (0 - 3*a^3 + 7*a^2*b^2 + 9*a*b + 4 - b^3 - 2*a*b^4)*z"
      " + (3*a^3*b + 7*a^2 - a^2*b^3 - a*b^2 + 2*b)*z^2");
  return v;
}

const MPoly& trace_eq1() {
  static const MPoly v = parse_poly(
      "(b^2 - 2*a)*t^2 + (4 + 5*a*b - 2*b^3)*t + (b^4 - 2*b - 3*a*b^2 + a^2)"
      " + (2*b + 5*a^2 - 2*a*b^2)*z*t + (b^2 + 2*a*b^3 - 5*a^2*b - 6*a)*z"
      " + (4 + a^2*b^2 + a*b - 2*a^3)*z^2");
  return v;
}

const MPoly& W_poly() {
  static const MPoly v = parse_poly("a^3 + 8 - b^3 + 6*a*b");
  return v;
}

const MPoly& W_poly_factored() {
  static const MPoly v = parse_poly("(a + 2 - b)*(a^2 - 2*a + 4 + a*b + 2*b + b^2)");
  return v;
}

const MPoly& Z_poly() {
  static const MPoly v = parse_poly(
      "1 + 7*z*b + 21*z^2*b^2 + z^3 + 35*z^3*b^3 + 35*z^4*b^4 + 21*z^5*b^5 + 7*z^6*b^6"
      " + z^7*b^7 + z^9*b^6 + 8*z^8*b^5 + 23*z^7*b^4 + 32*z^6*b^3 + 23*z^5*b^2 + 8*z^4*b"
      " - 2*z^6 + z^9 - z^9*b^3 - 5*z^8*b^2 - 6*z^7*b");
  return v;
}

const MPoly& B_poly(int i) {
  static const std::array<MPoly, 15> b = [] {
    std::array<MPoly, 15> v;
    v[1] = parse_poly("3*z^3 + z^4*b + 1 + z*b");
    v[2] = parse_poly(
        "5*z^3 + 10*z^4*b + 6*z^5*b^2 + z^6*b^3 + 4*z^6 + 2*z^7*b + 1 + 3*z*b"
        " + 3*z^2*b^2 + z^3*b^3");
    v[3] = parse_poly("b + 2*z*b^2 + 4*z^3*b + 5*z^4*b^2 + z^5*b^3 + z^2*b^3 - 2*z^5");
    v[4] = parse_poly(
        "(z*b + z^2*b + 1 + z - z^2) * (z*b + 1 + 2*z^3) * "
        "(z^4*b^2 - z^3*b^2 + z^2*b^2 + 1 + 2*z*b - z - 2*z^2*b + 2*z^2 + 3*z^3*b"
        " + z^3 + z^4*b + z^4)");
    v[5] = parse_poly("1 + z^3 + z^2*b^2 + 2*z*b");
    v[6] = parse_poly("z^3*b^3 + 1 + 2*z*b + 2*z^2*b^2 + z^3");
    v[7] = parse_poly(
        "1 + 4*z*b + 6*z^2*b^2 + 2*z^3 + 4*z^3*b^3 + z^4*b^4 + z^6*b^3 + 4*z^5*b^2"
        " + 5*z^4*b + z^6");
    v[8] = parse_poly("z^2*b^3 + b + 2*z*b^2 - 2*z^2 - z^3*b");
    v[9] = parse_poly(
        "1 + 6*z*b + 16*z^2*b^2 + 3*z^3 + 25*z^3*b^3 + 25*z^4*b^4 + 16*z^5*b^5"
        " + 6*z^6*b^6 + z^7*b^7 + 3*z^8*b^5 + 13*z^7*b^4 + 24*z^6*b^3 + 24*z^5*b^2"
        " + 13*z^4*b + z^7*b + z^6 + z^9");
    v[10] = parse_poly(
        "1 + 6*z*b + 16*z^2*b^2 + 3*z^3 + 25*z^3*b^3 + 25*z^4*b^4 + 16*z^5*b^5"
        " + 6*z^6*b^6 + z^7*b^7 + z^9*b^6 + 7*z^8*b^5 + 20*z^7*b^4 + 31*z^6*b^3"
        " + 28*z^5*b^2 + 14*z^4*b + z^6 + z^9 + z^9*b^3 + 2*z^8*b^2 + 2*z^7*b");
    v[11] = parse_poly(
        "6*z*b + 16*z^2*b^2 + 3*z^3 + 10*z^8*b^2 + 5*z^8*b^5 + z^7*b^7 + z^9*b^6"
        " + 12*z^7*b + 12*z^7*b^4 + 19*z^6*b^3 + 20*z^5*b^2 + 12*z^4*b + 6*z^6*b^6"
        " + 3*z^9*b^3 + 5*z^6 + z^9 + 1 + 25*z^3*b^3 + 25*z^4*b^4 + 16*z^5*b^5");
    v[12] = parse_poly(
        "2*b + 4*z^5*b^3 - 2*z^5 + 2*z^4*b^5 + 8*z*b^2 + 12*z^2*b^3 - 2*z^2"
        " + 8*z^3*b^4 + 3*z^4*b^2 - 2*z^3*b + z^6*b^4");
    v[13] = parse_poly(
        "1 + 8*z*b + 29*z^2*b^2 + 63*z^3*b^3 + 80*z^6*b^3 + 29*z^7*b^7 + 13*z^9*b^6"
        " + 17*z^9*b^3 + 91*z^4*b^4 + 57*z^5*b^2 + 23*z^4*b + 4*z^3 + 6*z^6 + 4*z^9"
        " + 91*z^5*b^5 + 63*z^6*b^6 + 39*z^8*b^5 + 70*z^7*b^4 + 30*z^8*b^2 + 22*z^7*b"
        " + z^12 + z^9*b^9 - z^12*b^6 + z^10*b^4 + 2*z^10*b^7 + 8*z^8*b^8 - 3*z^11*b^5"
        " + 3*z^11*b^2 + 7*z^10*b");
    v[14] = parse_poly(
        "2 + 8*z*b + 12*z^2*b^2 + 4*z^3 + 8*z^3*b^3 + 2*z^4*b^4 + z^6*b^3 + 6*z^5*b^2"
        " + 9*z^4*b + 2*z^6");
    return v;
  }();
  if (i < 1 || i > 14) throw CubicError("B_poly: index out of range");
  return b[size_t(i)];
}

const std::vector<TypeIFactored>& cpc_type1_factored() {
  static const std::vector<TypeIFactored> v = {
      {"1.2", parse_poly("0 - a*(a - b^2)")},
      {"2.4", parse_poly("(a - b^2)*(a^2 + b)")},
      {"3.2", parse_poly("0 - a^2*b^2 + 2 + a*b + a^3")},
      {"3.3", parse_poly("a*b + 2")},
      {"3.4", parse_poly("a*b*(a - b^2)")},
      {"4.1", parse_poly("0 - (a - b^2)*(a^2 + b)")},
      {"4.2", parse_poly("a*(a^3 + 2 + 2*a*b - a^2*b^2 - b^3)")},
      {"4.3", parse_poly("a*(a^3 - a^2*b^2 - 2 - b^3)")},
      {"4.4", MPoly::zero()},
      {"5.3", parse_poly("0 - (b^2 + 2*a + 2*a^2*b)")},
      {"5.4", parse_poly("a*(0 - a^3*b^2 - b^2 - a^2*b + a^4)")},
      {"6.4", parse_poly("0 - a*(b + 2*a^2)*(a - b^2)")},
  };
  return v;
}

const std::vector<TypeIIFactored>& cpc_type2_factored() {
  static const std::vector<TypeIIFactored> v = {
      {"1.2", -1, {4, 5, 6}, 0, 13, 8},
      {"2.4", -1, {4, 6, 7}, 0, 15, 9},
      {"3.2", +1, {4, 8}, 0, 15, 9},
      {"3.3", -1, {4, 9}, 0, 11, 7},
      {"3.4", +1, {4, 5, 6}, 1, 13, 8},
      {"4.1", +1, {4, 6, 7}, 0, 15, 9},
      {"4.2", +1, {4, 5, 10}, 0, 17, 10},
      {"4.3", +1, {4, 5, 11}, 0, 17, 10},
      {"4.4", 0, {}, 0, 0, 0},
      {"5.3", -1, {4, 12}, 0, 13, 8},
      {"5.4", -1, {4, 5, 13}, 0, 19, 11},
      {"6.4", -1, {4, 5, 6, 14}, 0, 17, 10},
  };
  return v;
}

const std::array<LmnFactored, 3>& lmn_factored() {
  static const std::array<LmnFactored, 3> v = {{
      {parse_poly("b"), -1, 1, 7, 4},
      {parse_poly("0 - (a*b + 2)"), -1, 2, 9, 5},
      {parse_poly("a - b^2"), +1, 3, 7, 5},
  }};
  return v;
}

const std::vector<CpcIdentity>& cpc_identities() {
  static const std::vector<CpcIdentity> v = {
      {"5.2", "3.2", parse_poly("0 - a")},
      {"6.2", "1.2", parse_poly("a")},
      {"1.4", "1.2", parse_poly("0 - a")},
  };
  return v;
}

const std::vector<std::string>& hq3_basis_words() {
  static const std::vector<std::string> v = {
      "",          "1",        "1^2",      "2",         "2^2",       "1 2",
      "2 1",       "1^2 2",    "2 1^2",    "1 2^2",     "2^2 1",     "1^2 2^2",
      "2^2 1^2",   "1 2 1",    "1^2 2 1",  "1 2 1^2",   "1 2^2 1^2", "1^2 2 1^2",
      "1^2 2^2 1", "1 2^2 1",  "1^2 2^2 1^2", "2 1^2 2", "2 1^2 2 1", "2 1^2 2 1^2",
  };
  return v;
}

}  // namespace cubic::paperdata
