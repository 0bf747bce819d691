#pragma once

// Coefficient rings the engine runs over: exact polynomials in a, b, z, t,
// or a prime-field quotient ring with the four parameters bound to values.

#include <map>
#include <memory>
#include <string>

#include "cubic/mpoly.hpp"
#include "cubic/primefield.hpp"

namespace cubic {

struct SymbolicRing {
  using Elem = MPoly;
  Elem zero() const { return MPoly::zero(); }
  Elem one() const { return MPoly::constant(1); }
  bool is_zero(const Elem& e) const { return e.is_zero(); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem from_mpoly(const MPoly& p) const { return p; }
};

// All four engine parameters evaluated in an F_p[x]/(f) quotient ring.
struct NumericRing {
  using Elem = ExtElem;
  std::shared_ptr<const ExtRing> R;
  std::map<std::string, ExtElem> bind;  // a, b, z, t

  Elem zero() const { return R->zero(); }
  Elem one() const { return R->one(); }
  bool is_zero(const Elem& e) const { return R->is_zero(e); }
  Elem add(const Elem& a, const Elem& b) const { return R->add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return R->sub(a, b); }
  Elem mul(const Elem& a, const Elem& b) const { return R->mul(a, b); }
  Elem neg(const Elem& a) const { return R->neg(a); }
  Elem from_mpoly(const MPoly& p) const { return R->eval(p, bind); }
};

// A random prime-field parameter point on a family's modulus hypersurface,
// with the trace parameters bound so the numeric engine can run. Two traces
// equal modulo the family ideal evaluate to the same ring element here.
struct FamilyPoint {
  Family family;
  NumericRing ring;
  ExtElem zbar;
};

// nullopt when a needed inverse does not exist at the sampled point
std::optional<FamilyPoint> try_family_point(Family f, std::mt19937_64& rng);
FamilyPoint family_point(Family f, std::mt19937_64& rng);  // retries

// type I only: the (a,b) -> (-b,-a) swapped engine ring for the dagger test
NumericRing swapped_ring(const NumericRing& r);

}  // namespace cubic
