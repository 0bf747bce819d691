#pragma once

// The braid-word rewriting engine. Reduces formal sums of positive words
// level by level: within a level the pair-reduction moves C0, C1, C2, C12,
// C21 and the commutations Pij bring every word to the form x b_{n-1}^e y,
// then the Markov move replaces b_{n-1} by z and b_{n-1}^2 by t.
//
// Everything is templated on the coefficient ring so the same machinery
// runs symbolically (MPoly in a, b, z, t) and numerically (prime-field
// quotient rings on the moduli hypersurfaces).

#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <unordered_map>
#include <vector>

#include "cubic/braid.hpp"
#include "cubic/paperdata.hpp"
#include "cubic/words.hpp"

namespace cubic {

enum class Rule { C0, C1, C2, C12, C21, Pij };

inline const char* rule_name(Rule r) {
  switch (r) {
    case Rule::C0: return "C0";
    case Rule::C1: return "C1";
    case Rule::C2: return "C2";
    case Rule::C12: return "C12";
    case Rule::C21: return "C21";
    case Rule::Pij: return "Pij";
  }
  return "?";
}

struct EngineOptions {
  long step_budget = 1000000;  // rule applications per trace
  bool randomized = false;     // random redex choice (C12/C21 preference kept)
  uint64_t seed = 0;
  std::ostream* trace_log = nullptr;
  bool memoize = true;  // forced off when randomized
};

template <class Ring>
class Engine {
 public:
  using C = typename Ring::Elem;
  using Sum = std::map<PositiveWord, C>;

  Engine(const Ring& ring, EngineOptions opt = {})
      : ring_(ring), opt_(opt), rng_(opt.seed) {
    if (opt_.randomized) opt_.memoize = false;
    alpha_ = ring_.from_mpoly(MPoly::var("a"));
    beta_ = ring_.from_mpoly(MPoly::var("b"));
    zc_ = ring_.from_mpoly(MPoly::var("z"));
    tc_ = ring_.from_mpoly(MPoly::var("t"));
    a2b_ = ring_.from_mpoly(parse_poly("a^2 + b"));
    ab1_ = ring_.from_mpoly(parse_poly("a*b + 1"));
    for (const auto& term : paperdata::c2_tail()) {
      c2_.push_back({term.factors, ring_.neg(ring_.from_mpoly(paperdata::table1(term.tag)))});
    }
    C one = ring_.one();
    // C12: h l^2 h^2 -> l^2 h^2 l + a (h l^2 h - l h^2 l) + b (h l^2 - h^2 l)
    c12_ = {{{{0, 2}, {1, 2}, {0, 1}}, one},
            {{{1, 1}, {0, 2}, {1, 1}}, alpha_},
            {{{0, 1}, {1, 2}, {0, 1}}, ring_.neg(alpha_)},
            {{{1, 1}, {0, 2}}, beta_},
            {{{1, 2}, {0, 1}}, ring_.neg(beta_)}};
    // C21: h^2 l^2 h -> l h^2 l^2 + a (h l^2 h - l h^2 l) + b (l^2 h - l h^2)
    c21_ = {{{{0, 1}, {1, 2}, {0, 2}}, one},
            {{{1, 1}, {0, 2}, {1, 1}}, alpha_},
            {{{0, 1}, {1, 2}, {0, 1}}, ring_.neg(alpha_)},
            {{{0, 2}, {1, 1}}, beta_},
            {{{0, 1}, {1, 2}}, ring_.neg(beta_)}};
  }

  const Ring& ring() const { return ring_; }
  long steps_used() const { return steps_; }
  void reset_budget() { steps_ = 0; }

  // --- canonical insertion: merge adjacent syllables, expand exponents 3, 4

  void add_canonical(Sum& out, const std::vector<PosSyl>& raw, const C& coeff) {
    if (ring_.is_zero(coeff)) return;
    std::vector<PosSyl> buf;
    buf.reserve(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) {
      PosSyl s = raw[i];
      if (s.exp == 0) continue;
      if (!buf.empty() && buf.back().index == s.index) {
        int e = buf.back().exp + s.exp;
        if (e <= 2) {
          buf.back().exp = uint8_t(e);
          continue;
        }
        // cubic relation: b^3 = a b^2 + b b + 1, b^4 = (a^2+b) b^2 + (ab+1) b + a
        bump_budget(Rule::C0, buf, int(buf.size()) - 1);
        const C* q2;
        const C* q1;
        const C* q0;
        if (e == 3) {
          q2 = &alpha_;
          q1 = &beta_;
          q0 = nullptr;  // one
        } else {
          q2 = &a2b_;
          q1 = &ab1_;
          q0 = &alpha_;
        }
        std::vector<PosSyl> rest(raw.begin() + i + 1, raw.end());
        for (int k = 0; k < 3; ++k) {
          std::vector<PosSyl> nraw(buf.begin(), buf.end() - 1);
          int exp2 = 2 - k;
          if (exp2 > 0) nraw.push_back({s.index, uint8_t(exp2)});
          nraw.insert(nraw.end(), rest.begin(), rest.end());
          C q = coeff;
          if (k == 0) q = ring_.mul(q, *q2);
          if (k == 1) q = ring_.mul(q, *q1);
          if (k == 2 && q0) q = ring_.mul(q, *q0);
          add_canonical(out, nraw, q);
        }
        return;
      }
      buf.push_back(s);
    }
    PositiveWord w(std::move(buf));
    auto it = out.find(w);
    if (it == out.end()) {
      out.emplace(std::move(w), coeff);
    } else {
      it->second = ring_.add(it->second, coeff);
      if (ring_.is_zero(it->second)) out.erase(it);
    }
  }

  // --- positivize: b_i^e as c2 b_i^2 + c1 b_i + c0 in the cubic quotient

  Sum positivize(const BraidWord& w) {
    Sum acc;
    acc.emplace(PositiveWord{}, ring_.one());
    for (const auto& syl : w.syllables()) {
      Sum next;
      if (syl.exponent == 1 || syl.exponent == 2) {
        for (const auto& [pw, c] : acc) {
          std::vector<PosSyl> raw = pw.syls();
          raw.push_back({uint8_t(syl.index), uint8_t(syl.exponent)});
          add_canonical(next, raw, c);
        }
      } else {
        auto [c2, c1, c0] = power_triple(syl.exponent);
        for (const auto& [pw, c] : acc) {
          for (int k = 0; k < 3; ++k) {
            const C& q = k == 0 ? c2 : k == 1 ? c1 : c0;
            if (ring_.is_zero(q)) continue;
            std::vector<PosSyl> raw = pw.syls();
            int exp = 2 - k;
            if (exp > 0) raw.push_back({uint8_t(syl.index), uint8_t(exp)});
            add_canonical(next, raw, ring_.mul(c, q));
          }
        }
      }
      acc = std::move(next);
    }
    return acc;
  }

  // --- level normalization: at most one syllable of index level-1 per word

  Sum normalize_level(const Sum& s, int level) {
    const int top = level - 1;
    Sum done, work = s;
    while (!work.empty()) {
      Sum next;
      for (const auto& [w, c] : work) {
        if (w.max_index() >= level)
          throw EngineError("normalize_level: word above level: " + w.str());
        int i1 = -1, i2 = -1;
        pick_pair(w, top, i1, i2);
        if (i2 < 0) {
          auto it = done.find(w);
          if (it == done.end()) {
            done.emplace(w, c);
          } else {
            it->second = ring_.add(it->second, c);
            if (ring_.is_zero(it->second)) done.erase(it);
          }
          continue;
        }
        reduce_pair(w, c, i1, i2, level, next);
      }
      work = std::move(next);
    }
    return done;
  }

  // --- Markov move (9): x b_{n-1} y -> z x y, x b_{n-1}^2 y -> t x y

  Sum markov_step(const Sum& s, int level) {
    const int top = level - 1;
    Sum out;
    for (const auto& [w, c] : s) {
      int pos = -1;
      for (size_t i = 0; i < w.size(); ++i) {
        if (w[i].index == top) {
          if (pos >= 0)
            throw EngineError("markov_step: two syllables of index " + std::to_string(top) +
                              " in " + w.str());
          pos = int(i);
        }
      }
      if (pos < 0) {
        add_canonical(out, w.syls(), c);
        continue;
      }
      log_rule(Rule::C0, w, pos, "R9");
      std::vector<PosSyl> raw;
      raw.reserve(w.size());
      for (size_t i = 0; i < w.size(); ++i)
        if (int(i) != pos) raw.push_back(w[i]);
      C q = ring_.mul(c, w[pos].exp == 1 ? zc_ : tc_);
      add_canonical(out, raw, q);
    }
    return out;
  }

  // --- full trace of a positive word at the given level (memoized)

  C trace_word(const PositiveWord& w, int level) {
    if (level <= 1) {
      if (!w.empty()) throw EngineError("trace_word: nonempty word at level 1: " + w.str());
      return ring_.one();
    }
    if (w.max_index() < level - 1) return trace_word(w, level - 1);
    std::string key;
    if (opt_.memoize) {
      key = w.key();
      key.push_back(char(level));
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    Sum nf = normalize_level({{w, ring_.one()}}, level);
    Sum lower = markov_step(nf, level);
    C acc = ring_.zero();
    for (const auto& [w2, c2] : lower) acc = ring_.add(acc, ring_.mul(c2, trace_word(w2, level - 1)));
    if (opt_.memoize) memo_.emplace(std::move(key), acc);
    return acc;
  }

  C trace_sum(const Sum& s, int level) {
    C acc = ring_.zero();
    for (const auto& [w, c] : s) acc = ring_.add(acc, ring_.mul(c, trace_word(w, level)));
    return acc;
  }

  C trace_raw(const BraidWord& w) {
    reset_budget();
    return trace_sum(positivize(w), w.strands());
  }

  // --- single rule application on a named word of a sum (test surface)

  Sum apply_rule(const Sum& s, Rule rule, const PositiveWord& w, int pos) {
    auto it = s.find(w);
    if (it == s.end()) throw EngineError("apply_rule: word not present: " + w.str());
    Sum out = s;
    C coeff = it->second;
    out.erase(w);
    auto mism = [&]() {
      return EngineError(std::string("apply_rule: ") + rule_name(rule) +
                         " does not match " + w.str() + " at position " + std::to_string(pos));
    };
    auto syl = [&](int i) -> const PosSyl& {
      if (i < 0 || size_t(i) >= w.size()) throw mism();
      return w[size_t(i)];
    };
    std::vector<PosSyl> pre(w.syls().begin(), w.syls().begin() + std::min<size_t>(pos, w.size()));
    switch (rule) {
      case Rule::C0:
        // canonical storage keeps exponents <= 2; C0 happens at construction
        throw mism();
      case Rule::Pij: {
        const PosSyl &x = syl(pos), &y = syl(pos + 1);
        if (std::abs(int(x.index) - int(y.index)) <= 1) throw mism();
        std::vector<PosSyl> raw = pre;
        raw.push_back(y);
        raw.push_back(x);
        raw.insert(raw.end(), w.syls().begin() + pos + 2, w.syls().end());
        add_canonical(out, raw, coeff);
        return out;
      }
      case Rule::C1:
      case Rule::C2:
      case Rule::C12:
      case Rule::C21: {
        const PosSyl &h1 = syl(pos), &l = syl(pos + 1), &h2 = syl(pos + 2);
        if (h1.index != h2.index || l.index + 1 != h1.index) throw mism();
        int e1 = h1.exp, d = l.exp, e2 = h2.exp;
        std::vector<PosSyl> post(w.syls().begin() + pos + 3, w.syls().end());
        bool ok = (rule == Rule::C1 && e1 == 1 && d == 1 && e2 == 1) ||
                  (rule == Rule::C2 && e1 == 1 && d == 2 && e2 == 1) ||
                  (rule == Rule::C12 && e1 == 1 && d == 2 && e2 == 2) ||
                  (rule == Rule::C21 && e1 == 2 && d == 2 && e2 == 1);
        if (!ok) throw mism();
        emit_window(out, rule, l.index, pre, post, coeff);
        return out;
      }
    }
    throw mism();
  }

  // normal form of a single word at a level, as a plain sum
  Sum normal_form(const PositiveWord& w, int level) {
    return normalize_level({{w, ring_.one()}}, level);
  }

 private:
  Ring ring_;
  EngineOptions opt_;
  std::mt19937_64 rng_;
  long steps_ = 0;
  C alpha_, beta_, zc_, tc_, a2b_, ab1_;
  struct ShapeTerm {
    std::vector<std::pair<int, int>> factors;  // (0=l / 1=h, exp)
    C coeff;
  };
  std::vector<ShapeTerm> c2_, c12_, c21_;
  std::unordered_map<std::string, C> memo_;

  std::tuple<C, C, C> power_triple(int e) {
    // b^e = c2 b^2 + c1 b + c0 in Z[a,b][b_i]/(cubic)
    C x2 = ring_.zero(), x1 = ring_.zero(), x0 = ring_.one();  // b^0
    if (e >= 0) {
      for (int k = 0; k < e; ++k) {
        C n2 = ring_.add(ring_.mul(alpha_, x2), x1);
        C n1 = ring_.add(ring_.mul(beta_, x2), x0);
        C n0 = x2;
        x2 = n2;
        x1 = n1;
        x0 = n0;
      }
      return {x2, x1, x0};
    }
    // b^-1 = b^2 - a b - b(eta)
    C m2 = ring_.one(), m1 = ring_.neg(alpha_), m0 = ring_.neg(beta_);
    for (int k = 0; k < -e; ++k) {
      // (x2 b^2 + x1 b + x0) * (m2 b^2 + m1 b + m0) reduced by the cubic
      C p4 = ring_.mul(x2, m2);
      C p3 = ring_.add(ring_.mul(x2, m1), ring_.mul(x1, m2));
      C p2 = ring_.add(ring_.add(ring_.mul(x2, m0), ring_.mul(x1, m1)), ring_.mul(x0, m2));
      C p1 = ring_.add(ring_.mul(x1, m0), ring_.mul(x0, m1));
      C p0 = ring_.mul(x0, m0);
      x2 = ring_.add(p2, ring_.add(ring_.mul(alpha_, p3), ring_.mul(a2b_, p4)));
      x1 = ring_.add(p1, ring_.add(ring_.mul(beta_, p3), ring_.mul(ab1_, p4)));
      x0 = ring_.add(p0, ring_.add(p3, ring_.mul(alpha_, p4)));
    }
    return {x2, x1, x0};
  }

  void bump_budget(Rule r, const std::vector<PosSyl>& context, int pos) {
    if (++steps_ > opt_.step_budget)
      throw EngineError("step budget exceeded (" + std::to_string(opt_.step_budget) +
                        " rule applications); stuck near: " + PositiveWord(context).str());
    if (opt_.trace_log) {
      (*opt_.trace_log) << rule_name(r) << "\t" << PositiveWord(context).str() << "\t" << pos
                        << "\n";
    }
  }

  void log_rule(Rule, const PositiveWord& w, int pos, const char* label) {
    ++steps_;
    if (steps_ > opt_.step_budget)
      throw EngineError("step budget exceeded near: " + w.str());
    if (opt_.trace_log) (*opt_.trace_log) << label << "\t" << w.str() << "\t" << pos << "\n";
  }

  void pick_pair(const PositiveWord& w, int top, int& i1, int& i2) {
    std::vector<int> tops;
    for (size_t i = 0; i < w.size(); ++i)
      if (w[i].index == top) tops.push_back(int(i));
    if (tops.size() < 2) {
      i1 = i2 = -1;
      return;
    }
    size_t j = 0;
    if (opt_.randomized && tops.size() > 2)
      j = std::uniform_int_distribution<size_t>(0, tops.size() - 2)(rng_);
    i1 = tops[j];
    i2 = tops[j + 1];
  }

  void emit_window(Sum& out, Rule rule, int low_index, const std::vector<PosSyl>& pre,
                   const std::vector<PosSyl>& post, const C& coeff) {
    const std::vector<ShapeTerm>& terms = rule == Rule::C2 ? c2_ : rule == Rule::C12 ? c12_ : c21_;
    if (rule == Rule::C1) {
      std::vector<PosSyl> raw = pre;
      raw.push_back({uint8_t(low_index), 1});
      raw.push_back({uint8_t(low_index + 1), 1});
      raw.push_back({uint8_t(low_index), 1});
      raw.insert(raw.end(), post.begin(), post.end());
      add_canonical(out, raw, coeff);
      return;
    }
    for (const auto& term : terms) {
      std::vector<PosSyl> raw = pre;
      for (const auto& [hl, exp] : term.factors)
        raw.push_back({uint8_t(low_index + hl), uint8_t(exp)});
      raw.insert(raw.end(), post.begin(), post.end());
      add_canonical(out, raw, ring_.mul(coeff, term.coeff));
    }
  }

  // One reduction step on the leftmost (or random) pair of top syllables.
  void reduce_pair(const PositiveWord& w, const C& coeff, int i1, int i2, int level, Sum& into) {
    const int top = level - 1;
    const int e1 = w[i1].exp, e2 = w[i2].exp;
    std::vector<PosSyl> gap(w.syls().begin() + i1 + 1, w.syls().begin() + i2);
    std::vector<PosSyl> prefix(w.syls().begin(), w.syls().begin() + i1);
    std::vector<PosSyl> suffix(w.syls().begin() + i2 + 1, w.syls().end());

    Sum gsum;
    if (gap.empty()) {
      gsum.emplace(PositiveWord{}, ring_.one());
    } else {
      Sum g0;
      add_canonical(g0, gap, ring_.one());
      gsum = normalize_level(g0, level - 1);
    }

    for (const auto& [g, gc] : gsum) {
      // split at the unique (top-1)-syllable; all other letters commute past b_top
      int mid = -1;
      for (size_t i = 0; i < g.size(); ++i)
        if (g[i].index == top - 1) {
          mid = int(i);
          break;
        }
      std::vector<PosSyl> u, v;
      int d = 0;
      if (mid < 0) {
        u = g.syls();
      } else {
        u.assign(g.syls().begin(), g.syls().begin() + mid);
        v.assign(g.syls().begin() + mid + 1, g.syls().end());
        d = g[mid].exp;
      }
      if (!u.empty() || !v.empty()) log_rule(Rule::Pij, g, mid, "Pij");
      C q = ring_.mul(coeff, gc);

      std::vector<PosSyl> pre = prefix;
      pre.insert(pre.end(), u.begin(), u.end());
      std::vector<PosSyl> post = v;
      post.insert(post.end(), suffix.begin(), suffix.end());

      if (d == 0) {
        // merge the two top syllables (C0 fires inside add_canonical)
        std::vector<PosSyl> raw = pre;
        raw.push_back({uint8_t(top), uint8_t(e1)});
        raw.push_back({uint8_t(top), uint8_t(e2)});
        raw.insert(raw.end(), post.begin(), post.end());
        add_canonical(into, raw, q);
        continue;
      }
      if (d == 1) {
        // the inner C1 window t m t; outer extra letters stay put
        bump_budget(Rule::C1, pre, int(pre.size()));
        std::vector<PosSyl> raw = pre;
        if (e1 == 2) raw.push_back({uint8_t(top), 1});
        raw.push_back({uint8_t(top - 1), 1});
        raw.push_back({uint8_t(top), 1});
        raw.push_back({uint8_t(top - 1), 1});
        if (e2 == 2) raw.push_back({uint8_t(top), 1});
        raw.insert(raw.end(), post.begin(), post.end());
        add_canonical(into, raw, q);
        continue;
      }
      // d == 2
      if (e1 == 1 && e2 == 1) {
        bump_budget(Rule::C2, pre, int(pre.size()));
        emit_window(into, Rule::C2, top - 1, pre, post, q);
      } else if (e1 == 1 && e2 == 2) {
        bump_budget(Rule::C12, pre, int(pre.size()));
        emit_window(into, Rule::C12, top - 1, pre, post, q);
      } else if (e1 == 2 && e2 == 1) {
        bump_budget(Rule::C21, pre, int(pre.size()));
        emit_window(into, Rule::C21, top - 1, pre, post, q);
      } else {
        // (2,2,2): prefer C12 on the right-aligned subword, or C21 on the
        // left-aligned one; both keep the C12/C21-over-C2 preference
        bool right = true;
        if (opt_.randomized) right = std::uniform_int_distribution<int>(0, 1)(rng_) == 0;
        if (right) {
          bump_budget(Rule::C12, pre, int(pre.size()) + 1);
          std::vector<PosSyl> pre2 = pre;
          pre2.push_back({uint8_t(top), 1});
          emit_window(into, Rule::C12, top - 1, pre2, post, q);
        } else {
          bump_budget(Rule::C21, pre, int(pre.size()));
          std::vector<PosSyl> post2 = post;
          post2.insert(post2.begin(), {uint8_t(top), 1});
          emit_window(into, Rule::C21, top - 1, pre, post2, q);
        }
      }
    }
  }
};

}  // namespace cubic
