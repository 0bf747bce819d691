#include "doctest.h"

#include <random>

#include "cubic/mpoly.hpp"
#include "cubic/paperdata.hpp"

using namespace cubic;

namespace {

MPoly random_poly(std::mt19937_64& rng, int maxterms, int maxdeg) {
  std::uniform_int_distribution<int> nt(0, maxterms);
  std::uniform_int_distribution<int> ed(0, maxdeg);
  std::uniform_int_distribution<long> cd(-9, 9);
  MPoly p;
  int n = nt(rng);
  for (int i = 0; i < n; ++i) {
    MPoly term = MPoly::constant(cd(rng));
    term *= MPoly::var("a", ed(rng));
    term *= MPoly::var("b", ed(rng));
    p += term;
  }
  return p;
}

}  // namespace

TEST_CASE("arith basics") {
  MPoly a = MPoly::var("a"), b = MPoly::var("b");
  CHECK((a + b) + (a - b) == a.scaled(2));
  CHECK((paperdata::h_modulus() - paperdata::h_modulus()).is_zero());
  CHECK(parse_poly("(2*a - b^2)*(a^2 + 2*b)") ==
        parse_poly("2*a^3 + 4*a*b - a^2*b^2 - 2*b^3"));
}

TEST_CASE("parse round trips") {
  MPoly h = paperdata::h_modulus();
  CHECK(parse_poly(h.str()) == h);
  CHECK(parse_poly("3/4*a^2 - 1/2").str() == "3/4*a^2 - 1/2");
  CHECK(parse_poly("z^-2").degree_in("z") == -2);
  CHECK_THROWS_AS(parse_poly("a + + b"), ParseError);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    MPoly p = random_poly(rng, 4, 5), q = random_poly(rng, 4, 5), r = random_poly(rng, 4, 5);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p + q == q + p);
  }
}

TEST_CASE("monomial units cancel exactly") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    MPoly p = random_poly(rng, 5, 4);
    MPoly u = MPoly::var("a", 3) * MPoly::var("b", 1);  // unit monomial
    RatFn f(p * u, u);
    CHECK(f == RatFn(p));
  }
}

TEST_CASE("substitute: moduli specializations from the table header") {
  const MPoly& h = paperdata::h_modulus();
  RatFn beta0 = substitute(h, {{"b", RatFn(Rat(0))}});
  CHECK(laurent_cast(beta0) == parse_poly("8*a^6 + 17*a^3 + 8"));
  RatFn alpha0 = substitute(h, {{"a", RatFn(Rat(0))}});
  CHECK(laurent_cast(alpha0) == parse_poly("8*b^6 - 17*b^3 + 8"));
}

TEST_CASE("substitute: type II trace parameter") {
  // a z + b + zbar under the type II bindings collapses to -(2z^5+d)/(z d)
  std::map<std::string, RatFn> bind;
  bind["a"] = RatFn(parse_poly("0-(z^7 + d^2)"), parse_poly("z^4*d"));
  bind["b"] = RatFn(parse_poly("d - z^2"), parse_poly("z^3"));
  bind["w"] = RatFn(parse_poly("0-z^4"), parse_poly("d"));  // zbar
  MPoly expr = parse_poly("a*z + b + w");
  RatFn got = substitute(expr, bind);
  RatFn want(parse_poly("0-(2*z^5 + d)"), parse_poly("z*d"));
  CHECK(got == want);
}

TEST_CASE("substitute is a ring homomorphism") {
  std::mt19937_64 rng(23);
  std::map<std::string, RatFn> bind;
  bind["a"] = RatFn(parse_poly("z^2 + 1"), parse_poly("z"));
  bind["b"] = RatFn(parse_poly("z - 3"), parse_poly("z^2"));
  for (int trial = 0; trial < 15; ++trial) {
    MPoly p = random_poly(rng, 3, 3), q = random_poly(rng, 3, 3);
    CHECK(substitute(p * q, bind) == substitute(p, bind) * substitute(q, bind));
    CHECK(substitute(p + q, bind) == substitute(p, bind) + substitute(q, bind));
  }
}

TEST_CASE("zero denominators are rejected at construction") {
  CHECK_THROWS_AS(RatFn(parse_poly("1"), MPoly::zero()), CubicError);
}

TEST_CASE("divrem_main round trip") {
  PrincipalModulus H(paperdata::h_modulus(), "a");
  CHECK(H.leading == 8);
  SUBCASE("exact cases") {
    auto [q, r] = divrem_main(paperdata::h_modulus(), H);
    CHECK(q == MPoly::constant(1));
    CHECK(r.is_zero());
    auto [q2, r2] = divrem_main(paperdata::h_modulus() + MPoly::constant(7), H);
    CHECK(q2 == MPoly::constant(1));
    CHECK(r2 == MPoly::constant(7));
    MPoly ab = parse_poly("a + b");
    auto [q3, r3] = divrem_main(ab * paperdata::h_modulus(), H);
    CHECK(q3 == ab);
    CHECK(r3.is_zero());
  }
  SUBCASE("random round trips and divisibility") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      MPoly p = random_poly(rng, 6, 8);
      auto [q, r] = divrem_main(p, H);
      CHECK(q * paperdata::h_modulus() + r == p);
      CHECK(r.degree_in("a") < 6);
      CHECK(divisible_by(p * paperdata::h_modulus(), H));
      CHECK_FALSE(divisible_by(p * paperdata::h_modulus() + MPoly::constant(3), H));
    }
  }
}

TEST_CASE("divisibility of the W-style obstructions") {
  PrincipalModulus H(paperdata::h_modulus(), "a");
  CHECK(paperdata::W_poly() == paperdata::W_poly_factored());
  CHECK(divisible_by(paperdata::W_poly() * paperdata::h_modulus(), H));
  CHECK_FALSE(divisible_by(MPoly::var("a"), H));
}

TEST_CASE("laurent_cast") {
  RatFn f(parse_poly("z^3 + d"), parse_poly("z^2"));
  CHECK(laurent_cast(f) == parse_poly("z + d*z^-2"));
  RatFn g(parse_poly("0 - (2*z^5 + d)"), parse_poly("z*d"));
  CHECK(laurent_cast(g) == parse_poly("0 - 2*z^4*d^-1 - z^-1"));
  RatFn bad(parse_poly("z + 1"), parse_poly("z^2 + d"));
  CHECK_THROWS_AS((void)laurent_cast(bad), NotLaurentError);
  try {
    (void)laurent_cast(bad);
  } catch (const NotLaurentError& e) {
    CHECK(e.denominator == parse_poly("z^2 + d"));
  }
}

TEST_CASE("principal modulus for the type II family") {
  PrincipalModulus P(paperdata::p_modulus(), "d");
  CHECK(P.leading == 1);
  CHECK(paperdata::p_modulus().degree_in("d") == 7);
  CHECK(divisible_by_laurent(paperdata::p_modulus().shifted("d", -2), P));
}

TEST_CASE("serialization forms") {
  MPoly p = parse_poly("8*a^6 + 17*a^3 + 8");
  CHECK(p.str() == "8*a^6 + 17*a^3 + 8");
  CHECK(json_terms(parse_poly("1/2*a - 1")) ==
        "[{\"exponents\":[1],\"num\":\"1\",\"den\":\"2\"},"
        "{\"exponents\":[0],\"num\":\"-1\",\"den\":\"1\"}]");
}
