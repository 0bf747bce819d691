#include "doctest.h"

#include "cubic/invariants.hpp"
#include "cubic/paperdata.hpp"

using namespace cubic;

TEST_CASE("parameter families build and verify their identities") {
  const ParameterSet& p1 = ParameterSet::type1();
  CHECK(p1.modulus.leading == 8);
  const ParameterSet& p2 = ParameterSet::type2();
  CHECK(p2.modulus.leading == 1);
  CHECK(p2.t == RatFn(parse_poly("0 - (2*z^5 + d)"), parse_poly("z*d")));
}

TEST_CASE("rescale_type1") {
  // trefoil: raw = a t + b z + 1 at n = 2
  MPoly raw = parse_poly("a*t + b*z + 1");
  CHECK(rescale_type1(raw, 2) == parse_poly("a^3 - b^3 + 5*a*b + 4"));
  CHECK(rescale_type1(parse_poly("1"), 1) == parse_poly("1"));
  CHECK(rescale_type1(parse_poly("z"), 2) == parse_poly("2*a - b^2"));
}

TEST_CASE("unknot normalizes to 1 in both families") {
  BraidWord b1 = parse_braid("1");
  SUBCASE("type I") {
    SpecializedInvariant sa = invariant_specialized(b1, Specialization::Alpha0);
    CHECK(sa.value == parse_poly("1"));
    SpecializedInvariant sb = invariant_specialized(b1, Specialization::Beta0);
    CHECK(sb.value == parse_poly("1"));
    // generic: T~ = z0 and exponent -1 on z0, so the product is exactly 1
    InvariantValue v = invariant_of(b1, Family::TypeI);
    CHECK(v.t_tilde == parse_poly("2*a - b^2"));
    CHECK(v.exp_z == Rat(-1));
    CHECK(v.exp_zbar == Rat(0));
  }
  SUBCASE("type II") {
    InvariantValue v = invariant_of(b1, Family::TypeII);
    CHECK(v.integral);
    CHECK(v.laurent_value == parse_poly("1"));
  }
}

TEST_CASE("trefoil specializations match the published row") {
  BraidWord tref = parse_braid("1^3");
  SpecializedInvariant beta0 = invariant_specialized(tref, Specialization::Beta0);
  CHECK(beta0.value == parse_poly("0 - 1 - 1/4*a^3"));
  SpecializedInvariant alpha0 = invariant_specialized(tref, Specialization::Alpha0);
  CHECK(alpha0.value == parse_poly("0 - 8*b^-3 + 2"));
}

TEST_CASE("figure eight and 6.2 published specializations") {
  BraidWord fig8 = parse_braid("1 -2 1 -2");
  SpecializedInvariant b0 = invariant_specialized(fig8, Specialization::Beta0);
  PrincipalModulus ha(parse_poly("8*a^6 + 17*a^3 + 8"), "a");
  CHECK(divisible_by_laurent(b0.value - parse_poly("8*a^-3 + 10 + a^3"), ha));

  BraidWord k62 = parse_braid("-1 2 -1 2^3");
  SpecializedInvariant a0 = invariant_specialized(k62, Specialization::Alpha0);
  PrincipalModulus hb(parse_poly("8*b^6 - 17*b^3 + 8"), "b");
  CHECK(divisible_by_laurent(a0.value - parse_poly("0 - 16*b^-3 + 19 - 2*b^3"), hb));
  SpecializedInvariant b62 = invariant_specialized(k62, Specialization::Beta0);
  CHECK(divisible_by_laurent(b62.value - parse_poly("0 - 5 - 19/4*a^3 - 1/2*a^6"), ha));
}

TEST_CASE("type II values are Laurent and satisfy the mod-3 pattern") {
  for (const char* text : {"1^3", "1 -2 1 -2", "1^2 2^2 -1 2"}) {
    BraidWord w = parse_braid(text);
    InvariantValue v = invariant_of(w, Family::TypeII);
    CHECK(v.integral);
    CHECK_FALSE(v.laurent_value.is_zero());
    CHECK(cubical_support(v).pass);
  }
}

TEST_CASE("cubical support reports") {
  BraidWord tref = parse_braid("1^3");
  InvariantValue v = invariant_of(tref, Family::TypeI);
  CHECK(v.t_tilde == parse_poly("a^3 - b^3 + 5*a*b + 4"));
  CHECK(cubical_support(v).pass);

  SpecializedInvariant sb = invariant_specialized(parse_braid("1 -2 1 -2"),
                                                  Specialization::Beta0);
  CHECK(cubical_support(sb).pass);

  // a constant (the unknot) is supported on the single class {0}
  SpecializedInvariant su = invariant_specialized(parse_braid("1"), Specialization::Beta0);
  CHECK(cubical_support(su).pass);

  // corrupted value fails with a witness
  InvariantValue bad = v;
  bad.t_tilde += parse_poly("a");
  CubicalReport rep = cubical_support(bad);
  CHECK_FALSE(rep.pass);
  CHECK(rep.detail.find("a^1") != std::string::npos);
}

TEST_CASE("half-integer exponents appear exactly for even-component closures") {
  BraidWord hopf = parse_braid("1^2");
  InvariantValue v = invariant_of(hopf, Family::TypeI);
  CHECK(v.components == 2);
  CHECK(v.epsilon == 1);
  CHECK_FALSE(v.integral);
  CHECK(v.exp_z == Rat(-3, 2));
  BraidWord tref = parse_braid("1^3");
  CHECK(invariant_of(tref, Family::TypeI).integral);
  CHECK_THROWS_AS(invariant_specialized(hopf, Specialization::Beta0), CubicError);
}

TEST_CASE("chirality") {
  CHECK(chirality_test(parse_braid("1^3")) == Chirality::ChiralEvidence);
  CHECK(chirality_test(parse_braid("1 -2 1 -2")) == Chirality::Inconclusive);
  CHECK(chirality_test(parse_braid("1")) == Chirality::Inconclusive);
}

TEST_CASE("amphicheiral swap consistency for the figure eight") {
  // I_beta(4.1) at b -> -a reproduces I_alpha(4.1)
  MPoly ib = parse_poly("0 - 8*b^-3 + 10 - b^3");
  MPoly swapped = ib.subst_poly({{"b", -MPoly::var("a")}});
  CHECK(swapped == parse_poly("8*a^-3 + 10 + a^3"));
}

TEST_CASE("lambda corollary consistency") {
  // K_n(0, 2L): type I parameters specialize to z = -L^2, t = L, zbar = -L
  const ParameterSet& p1 = ParameterSet::type1();
  std::map<std::string, RatFn> at{{"a", RatFn(Rat(0))}, {"b", RatFn(parse_poly("2*l"))}};
  CHECK(substitute(p1.z, at) == RatFn(parse_poly("0 - l^2")));
  CHECK(substitute(p1.t, at) == RatFn(parse_poly("l")));
  CHECK(substitute(p1.zbar, at) == RatFn(parse_poly("0 - l")));
  MPoly h_spec = laurent_cast(substitute(paperdata::h_modulus(), at));
  CHECK(h_spec == parse_poly("8*(64*l^6 - 17*l^3 + 1)"));
  // K_n(-2L, 0): z = -L, t = L^2, and H specializes to the same sextic
  std::map<std::string, RatFn> at2{{"a", RatFn(parse_poly("0 - 2*l"))}, {"b", RatFn(Rat(0))}};
  CHECK(substitute(p1.z, at2) == RatFn(parse_poly("0 - l")));
  CHECK(substitute(p1.t, at2) == RatFn(parse_poly("l^2")));
  MPoly h_spec2 = laurent_cast(substitute(paperdata::h_modulus(), at2));
  CHECK(h_spec2 == parse_poly("8*(64*l^6 - 17*l^3 + 1)"));

  // second corollary: the type II family passes through (z, zbar, t) =
  // (-L^2, L, (2L^3+1)/L^2) at (a, b) = (0, (L^3+1)/L^2), where d = -L^7
  std::map<std::string, RatFn> at3{{"z", RatFn(parse_poly("0 - l^2"))},
                                   {"d", RatFn(parse_poly("0 - l^7"))}};
  const ParameterSet& p2 = ParameterSet::type2();
  CHECK(substitute(p2.bind.at("a"), at3) == RatFn(Rat(0)));
  CHECK(substitute(p2.bind.at("b"), at3) == RatFn(parse_poly("l^3 + 1"), parse_poly("l^2")));
  CHECK(substitute(p2.zbar, at3) == RatFn(parse_poly("l")));
  CHECK(substitute(p2.t, at3) == RatFn(parse_poly("2*l^3 + 1"), parse_poly("l^2")));
  // P(-L^2, -L^7) is a unit multiple of the printed modulus L^9 - 2L^6 + L^3 + 1
  MPoly p_spec = laurent_cast(substitute(paperdata::p_modulus(), at3));
  PrincipalModulus printed(parse_poly("l^9 - 2*l^6 + l^3 + 1"), "l");
  CHECK(divisible_by_laurent(p_spec, printed));
}
