#include "doctest.h"

#include <random>

#include "cubic/paperdata.hpp"
#include "cubic/primefield.hpp"

using namespace cubic;

TEST_CASE("Fp arithmetic") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<uint64_t> d(1, kPrime - 1);
  for (int i = 0; i < 200; ++i) {
    Fp a(d(rng)), b(d(rng));
    CHECK(fp_add(a, fp_neg(a)).v == 0);
    CHECK(fp_mul(a, fp_inv(a)).v == 1);
    CHECK(fp_mul(a, b).v == fp_mul(b, a).v);
    CHECK(fp_sub(fp_add(a, b), b).v == a.v);
  }
  CHECK(Fp::from_rat(Rat(-1, 2)).v == fp_mul(fp_neg(Fp(1)), fp_inv(Fp(2))).v);
}

TEST_CASE("extension ring arithmetic mod H(a0, b)") {
  std::mt19937_64 rng(17);
  RingPoint pt = make_ring_point(paperdata::h_modulus(), "a", "b", rng);
  const ExtRing& R = pt.ring;
  CHECK(R.deg() == 6);
  // the modulus vanishes at the bound point by construction
  CHECK(R.is_zero(R.eval(paperdata::h_modulus(), pt.bind)));
  // ring laws on random elements
  std::uniform_int_distribution<uint64_t> d(0, kPrime - 1);
  auto rnd = [&] {
    ExtElem e = R.zero();
    for (auto& c : e) c = Fp(d(rng));
    return e;
  };
  for (int i = 0; i < 50; ++i) {
    ExtElem x = rnd(), y = rnd(), z = rnd();
    CHECK(R.is_zero(R.sub(R.mul(x, R.mul(y, z)), R.mul(R.mul(x, y), z))));
    CHECK(R.is_zero(R.sub(R.mul(x, R.add(y, z)), R.add(R.mul(x, y), R.mul(x, z)))));
    auto inv = R.inv(x);
    if (inv) CHECK(R.is_zero(R.sub(R.mul(x, *inv), R.one())));
  }
}

TEST_CASE("ring points on the type II modulus") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 5; ++i) {
    RingPoint pt = make_ring_point(paperdata::p_modulus(), "z", "d", rng);
    CHECK(pt.ring.deg() == 7);
    CHECK(pt.ring.is_zero(pt.ring.eval(paperdata::p_modulus(), pt.bind)));
    // d is invertible: P(z0, 0) = z0^23 != 0
    CHECK(pt.ring.inv(pt.bind.at("d")).has_value());
  }
}

TEST_CASE("pow with negative exponents") {
  std::mt19937_64 rng(31);
  RingPoint pt = make_ring_point(paperdata::p_modulus(), "z", "d", rng);
  const ExtRing& R = pt.ring;
  ExtElem dv = pt.bind.at("d");
  ExtElem x = R.mul(R.pow(dv, 3), R.pow(dv, -3));
  CHECK(R.is_zero(R.sub(x, R.one())));
}
