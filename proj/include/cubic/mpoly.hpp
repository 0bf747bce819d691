#pragma once

// Exact multivariate (Laurent) polynomials with rational coefficients,
// rational functions, and canonical reduction modulo a principal ideal
// whose generator has a constant leading coefficient in one main variable.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubic/common.hpp"

namespace cubic {

using ExpVec = std::vector<int>;

// Graded lexicographic, descending, so begin() is the leading term.
struct GradedLexDesc {
  bool operator()(const ExpVec& x, const ExpVec& y) const {
    long dx = 0, dy = 0;
    for (int e : x) dx += e;
    for (int e : y) dy += e;
    if (dx != dy) return dx > dy;
    return x > y;
  }
};

class MPoly {
 public:
  using TermMap = std::map<ExpVec, Rat, GradedLexDesc>;

  MPoly() = default;
  explicit MPoly(const Rat& c);  // constant
  MPoly(const std::string& var, int exp, const Rat& c = 1);

  static MPoly zero() { return MPoly(); }
  static MPoly constant(const Rat& c) { return MPoly(c); }
  static MPoly var(const std::string& name, int exp = 1) { return MPoly(name, exp); }

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // requires is_constant()
  bool is_monomial() const { return terms_.size() == 1; }
  size_t num_terms() const { return terms_.size(); }

  long total_degree() const;           // max over terms of sum of exponents
  int degree_in(const std::string& v) const;   // max exponent, 0 if absent
  int low_degree_in(const std::string& v) const;  // min exponent, 0 if absent
  bool has_negative_exponents() const;
  bool integer_coefficients() const;

  // coefficient of v^k, as a polynomial in the remaining variables
  MPoly coeff_of(const std::string& v, int k) const;
  Rat coeff(const ExpVec& exps, const std::vector<std::string>& vars) const;

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly scaled(const Rat& c) const;
  MPoly pow(int e) const;  // e >= 0
  bool operator==(const MPoly& o) const;
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  // multiply by c * prod vars^exps
  MPoly shifted(const std::string& v, int exp) const;

  // substitute a rational value for every variable (all must be bound)
  Rat eval(const std::map<std::string, Rat>& point) const;
  // substitute polynomials for a subset of variables
  MPoly subst_poly(const std::map<std::string, MPoly>& bindings) const;

  std::string str() const;

  // insert term (adds to existing), used by builders
  void add_term(const std::vector<std::string>& vars, const ExpVec& exps, const Rat& c);

  // remap this poly onto a variable list that must contain vars_
  MPoly on_vars(const std::vector<std::string>& target) const;

 private:
  friend MPoly align_op(const MPoly& a, const MPoly& b, int sign);
  std::vector<std::string> vars_;  // canonical order (see var_rank)
  TermMap terms_;                  // no zero coefficients

  void strip_unused();
};

// Parse "8*a^6 - 8*a^5*b^2 + 17*a^3 + 8" style literals. Whitespace is
// ignored; '*' between factors is optional; variables are [A-Za-z_]+,
// coefficients are rationals ("3/4"). Exponents may be negative.
MPoly parse_poly(const std::string& text);

// Rational function num/den. Kept with a content-free, monic denominator;
// the numerator may be Laurent. Equality is by cross-multiplication.
class RatFn {
 public:
  RatFn() : num_(MPoly::zero()), den_(MPoly::constant(1)) {}
  RatFn(MPoly num, MPoly den);
  explicit RatFn(const MPoly& p) : num_(p), den_(MPoly::constant(1)) {}
  explicit RatFn(const Rat& c) : num_(MPoly::constant(c)), den_(MPoly::constant(1)) {}

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFn operator+(const RatFn& o) const;
  RatFn operator-(const RatFn& o) const;
  RatFn operator*(const RatFn& o) const;
  RatFn operator-() const;
  RatFn inverse() const;  // error if zero
  RatFn pow(int e) const;  // any integer
  bool operator==(const RatFn& o) const;
  bool operator!=(const RatFn& o) const { return !(*this == o); }

  std::string str() const;

 private:
  MPoly num_, den_;
  void normalize();
};

struct NotLaurentError : CubicError {
  MPoly denominator;
  explicit NotLaurentError(const MPoly& den)
      : CubicError("denominator is not a monomial: " + den.str()), denominator(den) {}
};

// Succeeds iff the reduced denominator is 1 (i.e. was a monomial); the
// monomial part has already been folded into the Laurent numerator.
MPoly laurent_cast(const RatFn& r);

// substitute var -> rational function; unbound variables pass through
RatFn substitute(const MPoly& p, const std::map<std::string, RatFn>& bindings);
RatFn substitute(const RatFn& f, const std::map<std::string, RatFn>& bindings);

// Principal modulus with constant leading coefficient in the main variable.
struct PrincipalModulus {
  MPoly modulus;
  std::string main_var;
  Rat leading;  // validated constant

  PrincipalModulus(MPoly m, std::string v);
};

// p = q*m + r with deg_main(r) < deg_main(m), exact over the rationals.
// p must be polynomial (non-negative exponents) in the main variable.
std::pair<MPoly, MPoly> divrem_main(const MPoly& p, const PrincipalModulus& m);
bool divisible_by(const MPoly& p, const PrincipalModulus& m);

// Divisibility for a Laurent polynomial: clears the main-variable monomial
// first (the modulus is required to have a nonzero constant term in main_var).
bool divisible_by_laurent(const MPoly& p, const PrincipalModulus& m);

std::string json_terms(const MPoly& p);  // list of {exponents, num, den}

}  // namespace cubic
