#include "cubic/primefield.hpp"

#include <algorithm>

namespace cubic {

Fp Fp::from_rat(const Rat& r) {
  mpz_class num = r.get_num() % mpz_class(kPrime);
  mpz_class den = r.get_den() % mpz_class(kPrime);
  if (num < 0) num += mpz_class(kPrime);
  Fp n(num.get_ui());
  Fp d(den.get_ui());
  return fp_mul(n, fp_inv(d));
}

Fp fp_pow(Fp a, uint64_t e) {
  Fp acc(1);
  while (e) {
    if (e & 1) acc = fp_mul(acc, a);
    a = fp_mul(a, a);
    e >>= 1;
  }
  return acc;
}

Fp fp_inv(Fp a) {
  if (a.v == 0) throw CubicError("fp_inv: zero");
  return fp_pow(a, kPrime - 2);
}

namespace {

void trim(ExtElem& a) {
  while (!a.empty() && a.back().v == 0) a.pop_back();
}

// schoolbook polynomial helpers on low-to-high coefficient vectors
ExtElem poly_mul(const ExtElem& a, const ExtElem& b) {
  if (a.empty() || b.empty()) return {};
  ExtElem c(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].v == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = fp_add(c[i + j], fp_mul(a[i], b[j]));
  }
  return c;
}

// a mod f, f monic
ExtElem poly_mod(ExtElem a, const std::vector<Fp>& f) {
  trim(a);
  const size_t d = f.size() - 1;
  while (a.size() > d) {
    Fp lead = a.back();
    size_t shift = a.size() - 1 - d;
    if (lead.v != 0)
      for (size_t i = 0; i < d; ++i)
        a[shift + i] = fp_sub(a[shift + i], fp_mul(lead, f[i]));
    a.pop_back();
    trim(a);
  }
  return a;
}

}  // namespace

ExtRing::ExtRing(std::vector<Fp> f) {
  trim(f);
  if (f.size() < 2) throw CubicError("ExtRing: modulus must have degree >= 1");
  Fp lead_inv = fp_inv(f.back());
  for (auto& c : f) c = fp_mul(c, lead_inv);
  mod_ = std::move(f);
  deg_ = int(mod_.size()) - 1;
}

ExtElem ExtRing::one() const {
  ExtElem e(deg_);
  e[0] = Fp(1);
  return e;
}

ExtElem ExtRing::from_fp(Fp c) const {
  ExtElem e(deg_);
  e[0] = c;
  return e;
}

ExtElem ExtRing::gen() const {
  ExtElem e(deg_);
  if (deg_ >= 2) {
    e[1] = Fp(1);
    return e;
  }
  // degree-1 modulus: x == -mod_[0]
  e[0] = fp_neg(mod_[0]);
  return e;
}

bool ExtRing::is_zero(const ExtElem& a) const {
  return std::all_of(a.begin(), a.end(), [](Fp c) { return c.v == 0; });
}

ExtElem ExtRing::add(const ExtElem& a, const ExtElem& b) const {
  ExtElem c(deg_);
  for (int i = 0; i < deg_; ++i) c[i] = fp_add(a[i], b[i]);
  return c;
}
ExtElem ExtRing::sub(const ExtElem& a, const ExtElem& b) const {
  ExtElem c(deg_);
  for (int i = 0; i < deg_; ++i) c[i] = fp_sub(a[i], b[i]);
  return c;
}
ExtElem ExtRing::neg(const ExtElem& a) const {
  ExtElem c(deg_);
  for (int i = 0; i < deg_; ++i) c[i] = fp_neg(a[i]);
  return c;
}

ExtElem ExtRing::mul(const ExtElem& a, const ExtElem& b) const {
  ExtElem c = poly_mod(poly_mul(a, b), mod_);
  c.resize(deg_);
  return c;
}

ExtElem ExtRing::pow(const ExtElem& a, long e) const {
  if (e < 0) {
    auto i = inv(a);
    if (!i) throw CubicError("ExtRing::pow: non-invertible base");
    return pow(*i, -e);
  }
  ExtElem acc = one();
  ExtElem base = a;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::optional<ExtElem> ExtRing::inv(const ExtElem& a) const {
  // extended Euclid in F_p[x]: r0 = mod_, r1 = a
  ExtElem r0 = mod_, r1 = a, s0 = {}, s1 = {Fp(1)};
  trim(r1);
  trim(s1);
  if (r1.empty()) return std::nullopt;
  while (!r1.empty()) {
    // divide r0 by r1
    ExtElem q;
    ExtElem rem = r0;
    trim(rem);
    if (rem.size() >= r1.size()) {
      q.assign(rem.size() - r1.size() + 1, Fp(0));
      Fp lead_inv = fp_inv(r1.back());
      while (rem.size() >= r1.size() && !rem.empty()) {
        Fp f = fp_mul(rem.back(), lead_inv);
        size_t shift = rem.size() - r1.size();
        q[shift] = f;
        for (size_t i = 0; i < r1.size(); ++i)
          rem[shift + i] = fp_sub(rem[shift + i], fp_mul(f, r1[i]));
        trim(rem);
      }
    }
    // (r0, r1) = (r1, rem); (s0, s1) = (s1, s0 - q*s1)
    ExtElem qs = poly_mul(q, s1);
    ExtElem ns = s0;
    if (ns.size() < qs.size()) ns.resize(qs.size());
    for (size_t i = 0; i < qs.size(); ++i) ns[i] = fp_sub(ns[i], qs[i]);
    trim(ns);
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = ns;
  }
  // r0 = gcd; invertible iff gcd is a nonzero constant
  if (r0.size() != 1) return std::nullopt;
  Fp ginv = fp_inv(r0[0]);
  ExtElem out(deg_);
  for (size_t i = 0; i < s0.size() && i < out.size(); ++i) out[i] = fp_mul(s0[i], ginv);
  ExtElem red = poly_mod(out, mod_);
  red.resize(deg_);
  return red;
}

ExtElem ExtRing::eval(const MPoly& p, const std::map<std::string, ExtElem>& point) const {
  ExtElem out = zero();
  // cache powers of each bound value
  std::map<std::pair<std::string, int>, ExtElem> cache;
  for (const auto& [e, c] : p.terms()) {
    ExtElem term = from_fp(Fp::from_rat(c));
    for (size_t i = 0; i < p.vars().size(); ++i) {
      if (e[i] == 0) continue;
      const std::string& v = p.vars()[i];
      auto it = point.find(v);
      if (it == point.end()) throw CubicError("ExtRing::eval: unbound variable " + v);
      auto key = std::make_pair(v, e[i]);
      auto pit = cache.find(key);
      if (pit == cache.end()) pit = cache.emplace(key, pow(it->second, e[i])).first;
      term = mul(term, pit->second);
    }
    out = add(out, term);
  }
  return out;
}

RingPoint make_ring_point(const MPoly& modulus, const std::string& first_var,
                          const std::string& second_var, std::mt19937_64& rng) {
  std::uniform_int_distribution<uint64_t> dist(2, kPrime - 2);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Fp x0(dist(rng));
    int d = modulus.degree_in(second_var);
    std::vector<Fp> f(d + 1);
    bool ok = true;
    for (int k = 0; k <= d; ++k) {
      MPoly ck = modulus.coeff_of(second_var, k);
      // ck is a polynomial in first_var only
      Fp acc(0);
      for (const auto& [e, c] : ck.terms()) {
        Fp term = Fp::from_rat(c);
        for (size_t i = 0; i < ck.vars().size(); ++i) {
          if (e[i] == 0) continue;
          if (ck.vars()[i] != first_var) throw CubicError("make_ring_point: extra variable");
          term = fp_mul(term, fp_pow(x0, uint64_t(e[i])));
        }
        acc = fp_add(acc, term);
      }
      f[k] = acc;
    }
    if (f[d].v == 0) ok = false;  // leading coefficient must survive
    if (!ok) continue;
    ExtRing ring(f);
    RingPoint rp{ring, {}};
    rp.bind[first_var] = ring.from_fp(x0);
    rp.bind[second_var] = ring.gen();
    return rp;
  }
  throw CubicError("make_ring_point: could not find a usable random point");
}

}  // namespace cubic
