#include "cubic/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cubic {

namespace {

// Fixed display/storage priority for the variables this project uses.
int var_rank(const std::string& v) {
  if (v == "a") return 0;
  if (v == "b") return 1;
  if (v == "z") return 2;
  if (v == "t") return 3;
  if (v == "d") return 4;
  return 5;
}

bool var_before(const std::string& x, const std::string& y) {
  int rx = var_rank(x), ry = var_rank(y);
  if (rx != ry) return rx < ry;
  return x < y;
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  std::sort(out.begin(), out.end(), var_before);
  return out;
}

}  // namespace

MPoly::MPoly(const Rat& c) {
  if (c != 0) terms_[{}] = c;
}

MPoly::MPoly(const std::string& var, int exp, const Rat& c) {
  if (c == 0) return;
  if (exp == 0) {
    terms_[{}] = c;
    return;
  }
  vars_ = {var};
  terms_[{exp}] = c;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const ExpVec& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rat MPoly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw CubicError("not a constant: " + str());
  return terms_.begin()->second;
}

long MPoly::total_degree() const {
  long best = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    long d = 0;
    for (int x : e) d += x;
    if (first || d > best) best = d;
    first = false;
  }
  return best;
}

int MPoly::degree_in(const std::string& v) const {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) return 0;
  size_t i = it - vars_.begin();
  int best = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[i] > best) best = e[i];
    first = false;
  }
  return best;
}

int MPoly::low_degree_in(const std::string& v) const {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) return 0;
  size_t i = it - vars_.begin();
  int best = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[i] < best) best = e[i];
    first = false;
  }
  return best;
}

bool MPoly::has_negative_exponents() const {
  for (const auto& [e, c] : terms_)
    for (int x : e)
      if (x < 0) return true;
  return false;
}

bool MPoly::integer_coefficients() const {
  for (const auto& [e, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

MPoly MPoly::coeff_of(const std::string& v, int k) const {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  MPoly out;
  if (it == vars_.end()) {
    if (k == 0) return *this;
    return out;
  }
  size_t i = it - vars_.begin();
  for (const auto& [e, c] : terms_) {
    if (e[i] != k) continue;
    ExpVec rest = e;
    rest[i] = 0;
    out.add_term(vars_, rest, c);
  }
  return out;
}

Rat MPoly::coeff(const ExpVec& exps, const std::vector<std::string>& vars) const {
  // look up one monomial given in possibly different variable order
  ExpVec key(vars_.size(), 0);
  for (size_t i = 0; i < vars.size(); ++i) {
    if (exps[i] == 0) continue;
    auto it = std::find(vars_.begin(), vars_.end(), vars[i]);
    if (it == vars_.end()) return 0;
    key[it - vars_.begin()] = exps[i];
  }
  auto it = terms_.find(key);
  return it == terms_.end() ? Rat(0) : it->second;
}

void MPoly::strip_unused() {
  std::vector<size_t> used;
  for (size_t i = 0; i < vars_.size(); ++i) {
    bool any = false;
    for (const auto& [e, c] : terms_)
      if (e[i] != 0) {
        any = true;
        break;
      }
    if (any) used.push_back(i);
  }
  if (used.size() == vars_.size()) return;
  std::vector<std::string> nv;
  for (size_t i : used) nv.push_back(vars_[i]);
  TermMap nt;
  for (const auto& [e, c] : terms_) {
    ExpVec ne(used.size());
    for (size_t j = 0; j < used.size(); ++j) ne[j] = e[used[j]];
    nt[ne] = c;
  }
  vars_ = std::move(nv);
  terms_ = std::move(nt);
}

MPoly MPoly::on_vars(const std::vector<std::string>& target) const {
  MPoly out;
  out.vars_ = target;
  std::vector<int> pos(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(target.begin(), target.end(), vars_[i]);
    if (it == target.end()) throw CubicError("on_vars: missing variable " + vars_[i]);
    pos[i] = int(it - target.begin());
  }
  for (const auto& [e, c] : terms_) {
    ExpVec ne(target.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
    out.terms_[ne] = c;
  }
  return out;
}

MPoly align_op(const MPoly& a, const MPoly& b, int sign) {
  if (a.vars_ == b.vars_) {
    MPoly x = a;
    for (const auto& [e, c] : b.terms_) {
      auto [it, inserted] = x.terms_.try_emplace(e, c);
      if (inserted) {
        if (sign < 0) it->second = -it->second;
      } else {
        if (sign > 0)
          it->second += c;
        else
          it->second -= c;
        if (it->second == 0) x.terms_.erase(it);
      }
    }
    return x;
  }
  std::vector<std::string> uv = merge_vars(a.vars_, b.vars_);
  MPoly x = a.on_vars(uv);
  MPoly y = b.on_vars(uv);
  for (const auto& [e, c] : y.terms_) {
    Rat& dst = x.terms_[e];
    dst += sign > 0 ? c : Rat(-c);
    if (dst == 0) x.terms_.erase(e);
  }
  x.strip_unused();
  return x;
}

MPoly MPoly::operator+(const MPoly& o) const { return align_op(*this, o, +1); }
MPoly MPoly::operator-(const MPoly& o) const { return align_op(*this, o, -1); }

MPoly& MPoly::operator+=(const MPoly& o) {
  if (vars_ == o.vars_) {
    for (const auto& [e, c] : o.terms_) {
      auto [it, inserted] = terms_.try_emplace(e, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
      }
    }
    return *this;
  }
  return *this = align_op(*this, o, +1);
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (vars_ == o.vars_) {
    for (const auto& [e, c] : o.terms_) {
      auto [it, inserted] = terms_.try_emplace(e, -c);
      if (!inserted) {
        it->second -= c;
        if (it->second == 0) terms_.erase(it);
      }
    }
    return *this;
  }
  return *this = align_op(*this, o, -1);
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MPoly MPoly::operator*(const MPoly& o) const {
  if (is_zero() || o.is_zero()) return MPoly();
  auto accumulate = [](MPoly& out, const MPoly& x, const MPoly& y) {
    const size_t nv = out.vars_.size();
    ExpVec e(nv);
    Rat prod;
    for (const auto& [ex, cx] : x.terms_) {
      for (const auto& [ey, cy] : y.terms_) {
        for (size_t i = 0; i < nv; ++i) e[i] = ex[i] + ey[i];
        prod = cx * cy;
        auto [it, inserted] = out.terms_.try_emplace(e, prod);
        if (!inserted) {
          it->second += prod;
          if (it->second == 0) out.terms_.erase(it);
        }
      }
    }
  };
  MPoly out;
  if (vars_ == o.vars_) {
    out.vars_ = vars_;
    accumulate(out, *this, o);
    out.strip_unused();
    return out;
  }
  std::vector<std::string> uv = merge_vars(vars_, o.vars_);
  MPoly x = on_vars(uv);
  MPoly y = o.on_vars(uv);
  out.vars_ = uv;
  accumulate(out, x, y);
  out.strip_unused();
  return out;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly MPoly::scaled(const Rat& c) const {
  if (c == 0) return MPoly();
  MPoly out = *this;
  for (auto& [e, cc] : out.terms_) cc *= c;
  return out;
}

MPoly MPoly::pow(int e) const {
  if (e < 0) throw CubicError("MPoly::pow: negative exponent");
  MPoly acc = MPoly::constant(1);
  MPoly base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base = (e >>= 1) ? base * base : base;
  }
  return acc;
}

MPoly MPoly::shifted(const std::string& v, int exp) const {
  return *this * MPoly(v, exp);
}

bool MPoly::operator==(const MPoly& o) const {
  if (vars_ == o.vars_) return terms_ == o.terms_;
  return (*this - o).is_zero();
}

Rat MPoly::eval(const std::map<std::string, Rat>& point) const {
  Rat out = 0;
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = point.find(vars_[i]);
      if (it == point.end()) throw CubicError("eval: unbound variable " + vars_[i]);
      Rat v = it->second;
      int k = e[i];
      if (k < 0) {
        if (v == 0) throw CubicError("eval: zero to negative power");
        v = 1 / v;
        k = -k;
      }
      Rat p = 1;
      for (int j = 0; j < k; ++j) p *= v;
      term *= p;
    }
    out += term;
  }
  return out;
}

MPoly MPoly::subst_poly(const std::map<std::string, MPoly>& bindings) const {
  MPoly out;
  for (const auto& [e, c] : terms_) {
    MPoly term = MPoly::constant(c);
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = bindings.find(vars_[i]);
      if (it == bindings.end()) {
        term *= MPoly(vars_[i], e[i]);
      } else if (e[i] > 0) {
        term *= it->second.pow(e[i]);
      } else {
        // negative powers only make sense for monomial bindings
        const MPoly& m = it->second;
        if (!m.is_monomial())
          throw CubicError("subst_poly: negative power of a non-monomial binding");
        const auto& [me, mc] = *m.terms().begin();
        MPoly inv;
        ExpVec flip = me;
        for (int& x : flip) x = -x;
        inv.add_term(m.vars(), flip, 1 / mc);
        term *= inv.pow(-e[i]);
      }
    }
    out += term;
  }
  return out;
}

void MPoly::add_term(const std::vector<std::string>& vars, const ExpVec& exps, const Rat& c) {
  if (c == 0) return;
  MPoly t;
  std::vector<std::pair<std::string, int>> nz;
  for (size_t i = 0; i < vars.size(); ++i)
    if (exps[i] != 0) nz.push_back({vars[i], exps[i]});
  std::sort(nz.begin(), nz.end(),
            [](const auto& x, const auto& y) { return var_before(x.first, y.first); });
  for (const auto& [v, e] : nz) t.vars_.push_back(v);
  ExpVec ee;
  for (const auto& [v, e] : nz) ee.push_back(e);
  t.terms_[ee] = c;
  *this += t;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat cc = c;
    if (first) {
      if (cc < 0) {
        os << "-";
        cc = -cc;
      }
    } else {
      os << (cc < 0 ? " - " : " + ");
      if (cc < 0) cc = -cc;
    }
    first = false;
    bool anyvar = false;
    std::ostringstream vt;
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      if (anyvar) vt << " ";
      anyvar = true;
      vt << vars_[i];
      if (e[i] != 1) vt << "^" << e[i];
    }
    if (!anyvar) {
      os << cc.get_str();
    } else if (cc == 1) {
      os << vt.str();
    } else {
      os << cc.get_str() << "*" << vt.str();
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- parsing

namespace {

struct PolyParser {
  const std::string& s;
  size_t i = 0;

  explicit PolyParser(const std::string& text) : s(text) {}

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }

  Rat parse_rat() {
    skip();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw ParseError("expected number at offset " + std::to_string(i));
    std::string numstr = s.substr(start, i - start);
    if (peek() == '/') {
      ++i;
      skip();
      size_t d0 = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == d0) throw ParseError("expected denominator");
      numstr += "/" + s.substr(d0, i - d0);
    }
    Rat r(numstr);
    r.canonicalize();
    return r;
  }

  int parse_int() {
    skip();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++i;
    } else if (peek() == '+') {
      ++i;
    }
    skip();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw ParseError("expected integer exponent");
    int v = std::stoi(s.substr(start, i - start));
    return neg ? -v : v;
  }

  // term := factor (['*'] factor)* ;
  // factor := rational | var ['^' int] | '(' expr ')' ['^' int]
  MPoly parse_term() {
    MPoly mono = MPoly::constant(1);
    bool have_any = false;
    for (;;) {
      skip();
      if (peek() == '*') {
        ++i;
        skip();
      }
      if (i >= s.size()) break;
      char c = s[i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        mono = mono.scaled(parse_rat());
        have_any = true;
      } else if (c == '(') {
        ++i;
        MPoly inner = parse_expr();
        if (peek() != ')') throw ParseError("expected ')' at offset " + std::to_string(i));
        ++i;
        int exp = 1;
        if (peek() == '^') {
          ++i;
          exp = parse_int();
        }
        if (exp < 0) throw ParseError("negative exponent on parenthesized factor");
        mono *= inner.pow(exp);
        have_any = true;
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        size_t start = i;
        while (i < s.size() &&
               (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_'))
          ++i;
        std::string v = s.substr(start, i - start);
        int exp = 1;
        if (peek() == '^') {
          ++i;
          exp = parse_int();
        }
        mono *= MPoly(v, exp);
        have_any = true;
      } else {
        break;
      }
    }
    if (!have_any) throw ParseError("empty term at offset " + std::to_string(i));
    return mono;
  }

  MPoly parse_expr() {
    MPoly out;
    int sign = +1;
    if (peek() == '-') {
      sign = -1;
      ++i;
    } else if (peek() == '+') {
      ++i;
    }
    for (;;) {
      MPoly t = parse_term();
      out += sign > 0 ? t : -t;
      skip();
      if (i >= s.size() || s[i] == ')') break;
      char c = s[i];
      if (c == '+') {
        sign = +1;
        ++i;
      } else if (c == '-') {
        sign = -1;
        ++i;
      } else {
        throw ParseError(std::string("unexpected character '") + c + "' at offset " +
                         std::to_string(i));
      }
    }
    return out;
  }

  MPoly parse() {
    MPoly out = parse_expr();
    if (!eof()) throw ParseError("trailing input at offset " + std::to_string(i));
    return out;
  }
};

}  // namespace

MPoly parse_poly(const std::string& text) { return PolyParser(text).parse(); }

// ---------------------------------------------------------------- RatFn

RatFn::RatFn(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw CubicError("RatFn: zero denominator");
  normalize();
}

void RatFn::normalize() {
  if (num_.is_zero()) {
    den_ = MPoly::constant(1);
    return;
  }
  // pull the denominator's monomial content into the (Laurent) numerator
  for (const auto& v : std::vector<std::string>(den_.vars())) {
    int low = den_.low_degree_in(v);
    if (low != 0) {
      den_ = den_.shifted(v, -low);
      num_ = num_.shifted(v, -low);
    }
  }
  Rat lead = den_.terms().begin()->second;
  if (lead != 1) {
    den_ = den_.scaled(1 / lead);
    num_ = num_.scaled(1 / lead);
  }
}

RatFn RatFn::operator+(const RatFn& o) const {
  if (den_ == o.den_) return RatFn(num_ + o.num_, den_);
  return RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RatFn RatFn::operator-(const RatFn& o) const { return *this + (-o); }
RatFn RatFn::operator-() const {
  RatFn r = *this;
  r.num_ = -r.num_;
  return r;
}
RatFn RatFn::operator*(const RatFn& o) const {
  return RatFn(num_ * o.num_, den_ * o.den_);
}

RatFn RatFn::inverse() const {
  if (num_.is_zero()) throw CubicError("RatFn: inverse of zero");
  return RatFn(den_, num_);
}

RatFn RatFn::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFn acc(MPoly::constant(1));
  RatFn base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = (e >>= 1) ? base * base : base;
  }
  return acc;
}

bool RatFn::operator==(const RatFn& o) const {
  return (num_ * o.den_ - o.num_ * den_).is_zero();
}

std::string RatFn::str() const {
  if (den_.is_constant() && den_.constant_value() == 1) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

MPoly laurent_cast(const RatFn& r) {
  const MPoly& d = r.den();
  if (d.is_constant()) {
    Rat c = d.constant_value();
    return r.num().scaled(1 / c);
  }
  throw NotLaurentError(d);
}

RatFn substitute(const MPoly& p, const std::map<std::string, RatFn>& bindings) {
  for (const auto& [v, f] : bindings)
    if (f.den().is_zero()) throw CubicError("substitute: zero denominator binding for " + v);
  RatFn out(MPoly::zero());
  // cache powers per variable to keep repeated exponents cheap
  std::map<std::pair<std::string, int>, RatFn> powcache;
  auto power = [&](const std::string& v, int e) -> RatFn {
    auto key = std::make_pair(v, e);
    auto it = powcache.find(key);
    if (it != powcache.end()) return it->second;
    RatFn r = bindings.at(v).pow(e);
    powcache.emplace(key, r);
    return r;
  };
  for (const auto& [e, c] : p.terms()) {
    RatFn term{MPoly::constant(c)};
    for (size_t i = 0; i < p.vars().size(); ++i) {
      if (e[i] == 0) continue;
      const std::string& v = p.vars()[i];
      if (bindings.count(v)) {
        term = term * power(v, e[i]);
      } else {
        term = term * RatFn(MPoly(v, e[i]));
      }
    }
    out = out + term;
  }
  return out;
}

RatFn substitute(const RatFn& f, const std::map<std::string, RatFn>& bindings) {
  return substitute(f.num(), bindings) * substitute(f.den(), bindings).inverse();
}

// ------------------------------------------------- principal moduli

PrincipalModulus::PrincipalModulus(MPoly m, std::string v)
    : modulus(std::move(m)), main_var(std::move(v)) {
  if (modulus.is_zero()) throw CubicError("PrincipalModulus: zero modulus");
  int d = modulus.degree_in(main_var);
  if (modulus.low_degree_in(main_var) < 0)
    throw CubicError("PrincipalModulus: Laurent modulus not supported");
  MPoly lc = modulus.coeff_of(main_var, d);
  if (!lc.is_constant())
    throw CubicError("PrincipalModulus: leading coefficient in " + main_var +
                     " is not constant: " + lc.str());
  leading = lc.constant_value();
}

std::pair<MPoly, MPoly> divrem_main(const MPoly& p, const PrincipalModulus& m) {
  if (p.low_degree_in(m.main_var) < 0)
    throw CubicError("divrem_main: input is Laurent in " + m.main_var);
  const int dm = m.modulus.degree_in(m.main_var);
  MPoly q, r = p;
  for (;;) {
    int d = r.degree_in(m.main_var);
    if (r.is_zero() || d < dm) break;
    MPoly top = r.coeff_of(m.main_var, d).scaled(1 / m.leading);
    MPoly qterm = top.shifted(m.main_var, d - dm);
    q += qterm;
    r -= qterm * m.modulus;
  }
  return {q, r};
}

bool divisible_by(const MPoly& p, const PrincipalModulus& m) {
  return divrem_main(p, m).second.is_zero();
}

bool divisible_by_laurent(const MPoly& p, const PrincipalModulus& m) {
  if (p.is_zero()) return true;
  MPoly q = p;
  int low = q.low_degree_in(m.main_var);
  if (low < 0) {
    if (m.modulus.coeff_of(m.main_var, 0).is_zero())
      throw CubicError("divisible_by_laurent: modulus has zero constant term in " + m.main_var);
    q = q.shifted(m.main_var, -low);
  }
  return divisible_by(q, m);
}

std::string json_terms(const MPoly& p) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << ",";
    first = false;
    os << "{\"exponents\":[";
    for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << "],\"num\":\"" << c.get_num().get_str() << "\",\"den\":\""
       << c.get_den().get_str() << "\"}";
  }
  os << "]";
  return os.str();
}

}  // namespace cubic
