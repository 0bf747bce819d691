#include "cubic/ring.hpp"

#include "cubic/paperdata.hpp"

namespace cubic {

std::optional<FamilyPoint> try_family_point(Family f, std::mt19937_64& rng) {
  if (f == Family::TypeI) {
    RingPoint pt = make_ring_point(paperdata::h_modulus(), "a", "b", rng);
    auto R = std::make_shared<ExtRing>(pt.ring);
    ExtElem a = pt.bind.at("a"), b = pt.bind.at("b");
    ExtElem den = R->add(R->mul(a, b), R->from_fp(Fp(4)));  // ab + 4
    auto inv = R->inv(den);
    if (!inv) return std::nullopt;
    ExtElem z0 = R->sub(R->add(a, a), R->mul(b, b));                  // 2a - b^2
    ExtElem t0 = R->add(R->mul(a, a), R->add(b, b));                  // a^2 + 2b
    NumericRing nr{R, {{"a", a}, {"b", b}, {"z", R->mul(z0, *inv)}, {"t", R->mul(t0, *inv)}}};
    return FamilyPoint{f, nr, R->neg(nr.bind.at("t"))};
  }
  RingPoint pt = make_ring_point(paperdata::p_modulus(), "z", "d", rng);
  auto R = std::make_shared<ExtRing>(pt.ring);
  ExtElem z = pt.bind.at("z"), d = pt.bind.at("d");
  auto dinv = R->inv(d);
  auto zinv = R->inv(z);
  if (!dinv || !zinv) return std::nullopt;
  ExtElem z2 = R->mul(z, z), z3 = R->mul(z2, z), z4 = R->mul(z2, z2);
  ExtElem z5 = R->mul(z4, z), z7 = R->mul(z4, z3);
  ExtElem z3inv = R->mul(*zinv, R->mul(*zinv, *zinv));
  ExtElem a = R->neg(R->mul(R->add(z7, R->mul(d, d)),
                            R->mul(R->mul(*zinv, z3inv), *dinv)));  // -(z^7+d^2)/(z^4 d)
  ExtElem b = R->mul(R->sub(d, z2), z3inv);                         // (d - z^2)/z^3
  ExtElem zbar = R->neg(R->mul(z4, *dinv));                         // -z^4/d
  ExtElem t = R->neg(R->mul(R->add(R->add(z5, z5), d), R->mul(*zinv, *dinv)));
  NumericRing nr{R, {{"a", a}, {"b", b}, {"z", z}, {"t", t}}};
  return FamilyPoint{f, nr, zbar};
}

FamilyPoint family_point(Family f, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto fp = try_family_point(f, rng);
    if (fp) return *fp;
  }
  throw CubicError("family_point: no usable random point found");
}

NumericRing swapped_ring(const NumericRing& r) {
  NumericRing s{r.R, {}};
  s.bind["a"] = r.R->neg(r.bind.at("b"));
  s.bind["b"] = r.R->neg(r.bind.at("a"));
  s.bind["z"] = r.R->neg(r.bind.at("t"));
  s.bind["t"] = r.R->neg(r.bind.at("z"));
  return s;
}

}  // namespace cubic
