#include "cubic/invariants.hpp"

#include <sstream>

#include "json.hpp"

#include "cubic/engine.hpp"
#include "cubic/paperdata.hpp"
#include "cubic/ring.hpp"

namespace cubic {

namespace {

// one-time identity checks for a freshly built family
void verify_family(const ParameterSet& p) {
  RatFn e0 = substitute(paperdata::trace_eq0(), p.bind);
  RatFn e1 = substitute(paperdata::trace_eq1(), p.bind);
  if (!e0.is_zero() || !e1.is_zero())
    throw CubicError("parameter family does not satisfy the trace equations");
  if (p.family == Family::TypeI) {
    // H is fixed by (a,b) -> (-b,-a)
    MPoly swapped = paperdata::h_modulus().subst_poly(
        {{"a", -MPoly::var("b")}, {"b", -MPoly::var("a")}});
    if (!(swapped == paperdata::h_modulus()))
      throw CubicError("H is not (a,b)->(-b,-a) symmetric");
  } else {
    // t = a z + b + zbar equals the printed (2az - 2z^2 + b)/(2 + bz)
    RatFn printed = substitute(parse_poly("2*a*z - 2*z^2 + b"), p.bind) *
                    substitute(parse_poly("2 + b*z"), p.bind).inverse();
    if (!(printed == p.t))
      throw CubicError("type II t disagrees with the printed form");
    // the cubic constraint on z holds identically
    RatFn cubic = substitute(parse_poly("(a*b + 1)*z^3 + (a + b^2)*z^2 + 2*b*z + 1"), p.bind);
    if (!cubic.is_zero()) throw CubicError("type II cubic constraint fails");
  }
}

}  // namespace

const ParameterSet& ParameterSet::type1() {
  static const ParameterSet p = [] {
    RatFn z(parse_poly("2*a - b^2"), parse_poly("a*b + 4"));
    RatFn t(parse_poly("a^2 + 2*b"), parse_poly("a*b + 4"));
    ParameterSet ps{Family::TypeI,
                    {{"z", z}, {"t", t}},
                    z,
                    -t,
                    t,
                    PrincipalModulus(paperdata::h_modulus(), "a")};
    verify_family(ps);
    return ps;
  }();
  return p;
}

const ParameterSet& ParameterSet::type2() {
  static const ParameterSet p = [] {
    RatFn alpha(parse_poly("0 - (z^7 + d^2)"), parse_poly("z^4*d"));
    RatFn beta(parse_poly("d - z^2"), parse_poly("z^3"));
    RatFn zbar(parse_poly("0 - z^4"), parse_poly("d"));
    RatFn zfree{MPoly::var("z")};
    RatFn t = alpha * zfree + beta + zbar;  // = -(2z^5 + d)/(z d)
    ParameterSet ps{Family::TypeII,
                    {{"a", alpha}, {"b", beta}, {"t", t}},
                    zfree,
                    zbar,
                    t,
                    PrincipalModulus(paperdata::p_modulus(), "d")};
    verify_family(ps);
    return ps;
  }();
  return p;
}

MPoly trace_raw_of(const BraidWord& w, long step_budget) {
  SymbolicRing R;
  EngineOptions opt;
  opt.step_budget = step_budget;
  Engine<SymbolicRing> eng(R, opt);
  MPoly tr = eng.trace_raw(w);
  if (!tr.integer_coefficients())
    throw CubicError("trace has non-integer coefficients: " + tr.str());
  const int n = w.strands();
  for (const auto& [e, c] : tr.terms()) {
    long zt = 0;
    for (size_t i = 0; i < tr.vars().size(); ++i)
      if (tr.vars()[i] == "z" || tr.vars()[i] == "t") zt += e[i];
    if (zt > n - 1) throw CubicError("trace exceeds the (z,t)-degree bound: " + tr.str());
  }
  return tr;
}

MPoly rescale_type1(const MPoly& raw, int strands) {
  // z -> u z0, t -> u t0 with u = 1/(ab+4); multiply by u^{-(n-1)}
  const MPoly z0 = parse_poly("2*a - b^2");
  const MPoly t0 = parse_poly("a^2 + 2*b");
  const MPoly u_inv = parse_poly("a*b + 4");
  MPoly out;
  for (const auto& [e, c] : raw.terms()) {
    MPoly term = MPoly::constant(c);
    long d = 0;
    for (size_t i = 0; i < raw.vars().size(); ++i) {
      if (e[i] == 0) continue;
      const std::string& v = raw.vars()[i];
      if (v == "z") {
        term *= z0.pow(e[i]);
        d += e[i];
      } else if (v == "t") {
        term *= t0.pow(e[i]);
        d += e[i];
      } else {
        term *= MPoly(v, e[i]);
      }
    }
    long k = (strands - 1) - d;
    if (k < 0) throw CubicError("rescale_type1: degree bound violated");
    out += term * u_inv.pow(int(k));
  }
  if (!out.integer_coefficients())
    throw CubicError("rescaled trace has non-integer coefficients");
  return out;
}

MPoly specialize_type2(const MPoly& raw) {
  return laurent_cast(substitute(raw, ParameterSet::type2().bind));
}

InvariantValue normalize_invariant(const MPoly& raw, const BraidWord& w,
                                   const ParameterSet& p) {
  ClosureData cd = closure_components(w);
  InvariantValue v;
  v.family = p.family;
  v.braid_text = w.str();
  v.strands = w.strands();
  v.e = cd.exponent_sum;
  v.components = cd.components;
  v.epsilon = cd.epsilon;
  const int n = v.strands;
  v.exp_z = Rat(-(n - 1 + v.e), 2);
  v.exp_z.canonicalize();
  v.exp_zbar = Rat(v.e - n + 1, 2);
  v.exp_zbar.canonicalize();
  v.integral = v.exp_z.get_den() == 1;
  if (p.family == Family::TypeI) {
    v.t_tilde = rescale_type1(raw, n);
  } else {
    MPoly val = specialize_type2(raw);
    if (v.integral) {
      // z^a zbar^b with zbar = -z^4/d
      long a = v.exp_z.get_num().get_si();
      long b = v.exp_zbar.get_num().get_si();
      MPoly mono = MPoly::var("z", int(a + 4 * b)) * MPoly::var("d", int(-b));
      if (b % 2 != 0) mono = -mono;
      v.laurent_value = val * mono;
    } else {
      v.laurent_value = val;  // prefactor kept symbolic via exp_z / exp_zbar
    }
  }
  return v;
}

InvariantValue invariant_of(const BraidWord& w, Family f, long step_budget) {
  return normalize_invariant(trace_raw_of(w, step_budget), w, ParameterSet::of(f));
}

SpecializedInvariant invariant_specialized(const BraidWord& w, Specialization which,
                                           long step_budget) {
  ClosureData cd = closure_components(w);
  if (cd.components != 1)
    throw CubicError("specialized invariants require a knot closure (components = " +
                     std::to_string(cd.components) + ")");
  MPoly raw = trace_raw_of(w, step_budget);
  const int n = w.strands();
  const long e = cd.exponent_sum;
  const long a = -(n - 1 + e) / 2;
  const long b = (e - n + 1) / 2;
  SpecializedInvariant si;
  si.which = which;
  if (which == Specialization::TypeII) {
    InvariantValue v = normalize_invariant(raw, w, ParameterSet::type2());
    si.variable = "z,d";
    si.value = v.laurent_value;
    si.modulus = paperdata::p_modulus();
    si.main_var = "d";
  } else {
    MPoly tt = rescale_type1(raw, n);
    if (which == Specialization::Beta0) {
      // I = 2^a (-1)^b alpha^{a+2b} T~(a, 0)
      MPoly val = tt.subst_poly({{"b", MPoly::zero()}});
      Rat scale = Rat(1);
      for (long i = 0; i < std::labs(a); ++i) scale *= (a > 0 ? Rat(2) : Rat(1, 2));
      if (b % 2 != 0) scale = -scale;
      si.value = val.scaled(scale).shifted("a", int(a + 2 * b));
      si.variable = "a";
      si.modulus = parse_poly("8*a^6 + 17*a^3 + 8");
      si.main_var = "a";
    } else {
      // I = (-1)^{a+b} 2^b beta^{2a+b} T~(0, b)
      MPoly val = tt.subst_poly({{"a", MPoly::zero()}});
      Rat scale = Rat(1);
      for (long i = 0; i < std::labs(b); ++i) scale *= (b > 0 ? Rat(2) : Rat(1, 2));
      if ((a + b) % 2 != 0) scale = -scale;
      si.value = val.scaled(scale).shifted("b", int(2 * a + b));
      si.variable = "b";
      si.modulus = parse_poly("8*b^6 - 17*b^3 + 8");
      si.main_var = "b";
    }
  }
  PrincipalModulus pm(si.modulus, si.main_var);
  int low = si.value.low_degree_in(si.main_var);
  si.shift = low < 0 ? -low : 0;
  si.canonical_remainder = divrem_main(si.value.shifted(si.main_var, si.shift), pm).second;
  return si;
}

CubicalReport cubical_support(const InvariantValue& v) {
  CubicalReport rep;
  auto fail = [&](const std::string& what) {
    rep.pass = false;
    if (!rep.detail.empty()) rep.detail += "; ";
    rep.detail += what;
  };
  if (v.family == Family::TypeI) {
    // every monomial a^p b^q of T~ has p - q = e (mod 3)
    const MPoly& tt = v.t_tilde;
    for (const auto& [exps, c] : tt.terms()) {
      long p = 0, q = 0;
      for (size_t i = 0; i < tt.vars().size(); ++i) {
        if (tt.vars()[i] == "a") p = exps[i];
        if (tt.vars()[i] == "b") q = exps[i];
      }
      if (((p - q - v.e) % 3 + 3) % 3 != 0)
        fail("monomial a^" + std::to_string(p) + " b^" + std::to_string(q) +
             " violates p - q = e (mod 3)");
    }
  } else if (v.integral) {
    // every monomial z^k d^j satisfies j = k (mod 3)
    const MPoly& val = v.laurent_value;
    for (const auto& [exps, c] : val.terms()) {
      long k = 0, j = 0;
      for (size_t i = 0; i < val.vars().size(); ++i) {
        if (val.vars()[i] == "z") k = exps[i];
        if (val.vars()[i] == "d") j = exps[i];
      }
      if (((k - j) % 3 + 3) % 3 != 0)
        fail("monomial z^" + std::to_string(k) + " d^" + std::to_string(j) +
             " violates the (3,k)-Laurent pattern");
    }
  }
  return rep;
}

CubicalReport cubical_support(const SpecializedInvariant& si) {
  CubicalReport rep;
  if (si.which == Specialization::TypeII) {
    InvariantValue fake;
    fake.family = Family::TypeII;
    fake.integral = true;
    fake.laurent_value = si.value;
    fake.e = 0;
    return cubical_support(fake);
  }
  // single residue class mod 3 in the surviving variable
  std::optional<long> cls;
  for (const auto& [exps, c] : si.value.terms()) {
    long k = 0;
    for (size_t i = 0; i < si.value.vars().size(); ++i)
      if (si.value.vars()[i] == si.main_var) k = exps[i];
    long r = ((k % 3) + 3) % 3;
    if (!cls) {
      cls = r;
    } else if (*cls != r) {
      rep.pass = false;
      rep.detail = "exponent " + std::to_string(k) + " leaves residue class " +
                   std::to_string(*cls);
    }
  }
  return rep;
}

Chirality chirality_test(const BraidWord& w, long step_budget) {
  // Compare I(w) and I(w+) at the same parameters. The dagger lemma turns
  // I(w+) into the (a,b) -> (-b,-a) image of I(w); since H is fixed by the
  // swap (asserted when the family is built) the two live in the same ring.
  ClosureData cd = closure_components(w);
  if (cd.components != 1) throw CubicError("chirality_test: knot closure required");
  const int n = w.strands();
  const long e = cd.exponent_sum;
  MPoly tt = rescale_type1(trace_raw_of(w, step_budget), n);
  BraidWord wd = dagger_word(w);
  MPoly ttd = rescale_type1(trace_raw_of(wd, step_budget), n);
  // I(w)  = (-1)^b  z0^a  t0^b  T~,  a = -(n-1+e)/2, b = (e-n+1)/2
  // I(w+) = (-1)^b' z0^a' t0^b' T~+, a' = b, b' = a
  const long a = -(n - 1 + e) / 2, b = (e - n + 1) / 2;
  const long a2 = b, b2 = a;
  const MPoly z0 = parse_poly("2*a - b^2"), t0 = parse_poly("a^2 + 2*b");
  long ma = std::min(a, a2), mb = std::min(b, b2);
  MPoly lhs = tt * z0.pow(int(a - ma)) * t0.pow(int(b - mb));
  if (b % 2 != 0) lhs = -lhs;
  MPoly rhs = ttd * z0.pow(int(a2 - ma)) * t0.pow(int(b2 - mb));
  if (b2 % 2 != 0) rhs = -rhs;
  PrincipalModulus H(paperdata::h_modulus(), "a");
  return divisible_by(lhs - rhs, H) ? Chirality::Inconclusive : Chirality::ChiralEvidence;
}

std::string to_json(const InvariantValue& v, const SpecializedInvariant* spec) {
  nlohmann::ordered_json j;
  j["family"] = v.family == Family::TypeI ? "I" : "II";
  j["braid"] = v.braid_text;
  j["strands"] = v.strands;
  j["e"] = v.e;
  j["components"] = v.components;
  j["epsilon"] = v.epsilon;
  if (v.family == Family::TypeI) {
    j["T_tilde"] = v.t_tilde.str();
    j["modulus"] = paperdata::h_modulus().str();
  } else {
    j["value"] = v.laurent_value.str();
    j["modulus"] = paperdata::p_modulus().str();
  }
  j["exp_z0"] = rat_str(v.exp_z);
  j["exp_zbar0"] = rat_str(v.exp_zbar);
  if (spec) {
    nlohmann::ordered_json s;
    s["variable"] = spec->variable;
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
    for (const auto& [exps, c] : spec->value.terms()) {
      long k = 0;
      for (size_t i = 0; i < spec->value.vars().size(); ++i)
        if (spec->value.vars()[i] == spec->main_var) k = exps[i];
      coeffs[std::to_string(k)] = rat_str(c);
    }
    s["coeffs"] = coeffs;
    s["modulus"] = spec->modulus.str();
    j["specialized"] = s;
  }
  return j.dump();
}

}  // namespace cubic
