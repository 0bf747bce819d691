#pragma once

// Arithmetic mod p = 2^61 - 1 and in univariate quotient rings F_p[x]/(f).
// Used for fast probabilistic identity checking on the moduli hypersurfaces.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "cubic/common.hpp"
#include "cubic/mpoly.hpp"

namespace cubic {

constexpr uint64_t kPrime = (uint64_t(1) << 61) - 1;

struct Fp {
  uint64_t v = 0;
  Fp() = default;
  explicit Fp(uint64_t x) : v(x % kPrime) {}
  static Fp from_int(long long x) {
    long long r = x % (long long)kPrime;
    if (r < 0) r += kPrime;
    return Fp(uint64_t(r));
  }
  static Fp from_rat(const Rat& r);
  bool operator==(const Fp& o) const { return v == o.v; }
  bool operator!=(const Fp& o) const { return v != o.v; }
};

inline Fp fp_add(Fp a, Fp b) {
  uint64_t s = a.v + b.v;
  if (s >= kPrime) s -= kPrime;
  return Fp(s);
}
inline Fp fp_sub(Fp a, Fp b) {
  uint64_t s = a.v + kPrime - b.v;
  if (s >= kPrime) s -= kPrime;
  return Fp(s);
}
inline Fp fp_neg(Fp a) { return a.v == 0 ? a : Fp(kPrime - a.v); }
inline Fp fp_mul(Fp a, Fp b) {
  __uint128_t p = (__uint128_t)a.v * b.v;
  uint64_t lo = (uint64_t)(p & kPrime);
  uint64_t hi = (uint64_t)(p >> 61);
  uint64_t s = lo + hi;
  if (s >= kPrime) s -= kPrime;
  return Fp(s);
}
Fp fp_pow(Fp a, uint64_t e);
Fp fp_inv(Fp a);  // error on zero

// Element of F_p[x] / (f), f monic of degree d; coefficients low-to-high.
using ExtElem = std::vector<Fp>;

class ExtRing {
 public:
  // f given low-to-high, any nonzero leading coefficient (made monic here)
  explicit ExtRing(std::vector<Fp> f);

  int deg() const { return deg_; }
  ExtElem zero() const { return ExtElem(deg_); }
  ExtElem one() const;
  ExtElem from_fp(Fp c) const;
  ExtElem gen() const;  // the class of x

  bool is_zero(const ExtElem& a) const;
  ExtElem add(const ExtElem& a, const ExtElem& b) const;
  ExtElem sub(const ExtElem& a, const ExtElem& b) const;
  ExtElem neg(const ExtElem& a) const;
  ExtElem mul(const ExtElem& a, const ExtElem& b) const;
  ExtElem pow(const ExtElem& a, long e) const;  // negative uses inverse
  // nullopt when a is a zero divisor mod f (caller resamples the point)
  std::optional<ExtElem> inv(const ExtElem& a) const;

  // evaluate an MPoly, with every variable bound to a ring element
  ExtElem eval(const MPoly& p, const std::map<std::string, ExtElem>& point) const;

 private:
  int deg_;
  std::vector<Fp> mod_;  // monic, size deg_+1
};

// Random parameter point on a family modulus hypersurface, realized as the
// quotient ring F_p[y]/(modulus(x0, y)) for a random x0. first_var is bound
// to the scalar x0, second_var to the class of y.
struct RingPoint {
  ExtRing ring;
  std::map<std::string, ExtElem> bind;  // first/second var bindings
};

RingPoint make_ring_point(const MPoly& modulus, const std::string& first_var,
                          const std::string& second_var, std::mt19937_64& rng);

}  // namespace cubic
