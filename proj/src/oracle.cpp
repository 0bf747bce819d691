#include "cubic/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "cubic/engine.hpp"
#include "cubic/paperdata.hpp"
#include "cubic/primefield.hpp"
#include "cubic/ring.hpp"

namespace cubic {

namespace {

using Mat = std::vector<std::vector<MPoly>>;
using Vec = std::vector<MPoly>;
using Sym = Engine<SymbolicRing>;

// All operator identities are verified column by column: applying a 21x21
// matrix to a vector costs 21^2 polynomial multiplies, against 21^3 for a
// full product, and keeps the entries from piling up.
Vec mat_apply(const Mat& m, const Vec& v) {
  const size_t n = v.size();
  Vec out(n);
  for (size_t j = 0; j < n; ++j) {
    if (v[j].is_zero()) continue;
    for (size_t i = 0; i < n; ++i) {
      if (m[i][j].is_zero()) continue;
      out[i] += m[i][j] * v[j];
    }
  }
  return out;
}

Vec unit_vec(size_t n, size_t at) {
  Vec v(n);
  v[at] = MPoly::constant(1);
  return v;
}

bool vec_zero(const Vec& v) {
  for (const auto& e : v)
    if (!e.is_zero()) return false;
  return true;
}

Fp eval_fp(const MPoly& p, Fp a, Fp b) {
  Fp acc(0);
  for (const auto& [e, c] : p.terms()) {
    Fp term = Fp::from_rat(c);
    for (size_t i = 0; i < p.vars().size(); ++i) {
      if (e[i] == 0) continue;
      Fp base = p.vars()[i] == "a" ? a : b;
      if (e[i] < 0) throw CubicError("eval_fp: negative exponent");
      term = fp_mul(term, fp_pow(base, uint64_t(e[i])));
    }
    acc = fp_add(acc, term);
  }
  return acc;
}

PositiveWord word_from_text(const std::string& text) {
  BraidWord braid = parse_braid(text, 3);
  std::vector<PosSyl> syls;
  for (const auto& s : braid.syllables())
    syls.push_back({uint8_t(s.index), uint8_t(s.exponent)});
  return PositiveWord(syls);
}

struct RepOps {
  const RegularRep& rep;

  Vec apply_word(const PositiveWord& w, Vec v) const {
    // letters act on the left, so walk the word right to left
    for (auto it = w.syls().rbegin(); it != w.syls().rend(); ++it) {
      const Mat& g = it->index == 1 ? rep.mat_b1 : rep.mat_b2;
      for (int e = 0; e < it->exp; ++e) v = mat_apply(g, v);
    }
    return v;
  }

  Vec apply_sum(const std::map<PositiveWord, MPoly>& sum, const Vec& v) const {
    Vec acc(v.size());
    for (const auto& [w, c] : sum) {
      Vec img = apply_word(w, v);
      for (size_t i = 0; i < v.size(); ++i)
        if (!img[i].is_zero()) acc[i] += img[i] * c;
    }
    return acc;
  }

  // sum acts as the zero operator
  bool sum_is_zero(const std::map<PositiveWord, MPoly>& sum) const {
    for (size_t j = 0; j < size_t(rep.dim); ++j)
      if (!vec_zero(apply_sum(sum, unit_vec(size_t(rep.dim), j)))) return false;
    return true;
  }
};

std::map<PositiveWord, MPoly> r0_sum(Sym& eng) {
  // b2 b1^2 b2 plus the 21-term tail, i.e. the relation the C2 move encodes
  std::map<PositiveWord, MPoly> sum;
  SymbolicRing R;
  eng.add_canonical(sum, {{2, 1}, {1, 2}, {2, 1}}, R.one());
  for (const auto& term : paperdata::c2_tail()) {
    std::vector<PosSyl> raw;
    for (auto [hl, e] : term.factors) raw.push_back({uint8_t(1 + hl), uint8_t(e)});
    eng.add_canonical(sum, raw, paperdata::table1(term.tag));
  }
  return sum;
}

std::map<PositiveWord, MPoly> left_multiply(Sym& eng, int gen,
                                            const std::map<PositiveWord, MPoly>& sum) {
  std::map<PositiveWord, MPoly> out;
  for (const auto& [w, c] : sum) {
    std::vector<PosSyl> raw;
    raw.push_back({uint8_t(gen), 1});
    raw.insert(raw.end(), w.syls().begin(), w.syls().end());
    eng.add_canonical(out, raw, c);
  }
  return out;
}

std::map<PositiveWord, MPoly> negated_shape_sum(
    Sym& eng, const std::vector<paperdata::CoeffShape>& terms) {
  std::map<PositiveWord, MPoly> out;
  for (const auto& t : terms) {
    std::vector<PosSyl> raw;
    for (auto [hl, e] : t.factors) raw.push_back({uint8_t(1 + hl), uint8_t(e)});
    eng.add_canonical(out, raw, -t.coeff);
  }
  return out;
}

}  // namespace

SpanningSet enumerate_W(int n) {
  if (n < 0) throw CubicError("enumerate_W: negative level");
  SpanningSet cur{0, {PositiveWord{}}};
  for (int k = 0; k < n; ++k) {
    // Z_k: b_k^{i0} b_{k-1}^{i1} ... b_{k-p}^{ip}, i0 in {0,1,2}, rest in {1,2}
    std::vector<PositiveWord> zk;
    std::set<std::string> seen;
    auto push = [&](const std::vector<PosSyl>& syls) {
      PositiveWord w(syls);
      if (seen.insert(w.key()).second) zk.push_back(w);
    };
    if (k == 0) {
      push({});
    } else {
      for (int p = 0; p <= k - 1; ++p) {
        std::vector<int> exps(size_t(p) + 1);
        std::function<void(size_t)> rec = [&](size_t pos) {
          if (pos == exps.size()) {
            std::vector<PosSyl> syls;
            for (size_t i = 0; i < exps.size(); ++i)
              if (exps[i] > 0) syls.push_back({uint8_t(k - int(i)), uint8_t(exps[i])});
            push(syls);
            return;
          }
          for (int e = (pos == 0 ? 0 : 1); e <= 2; ++e) {
            exps[pos] = e;
            rec(pos + 1);
          }
        };
        rec(0);
      }
    }
    SpanningSet next{k + 1, cur.words};
    std::set<std::string> in_next;
    for (const auto& w : next.words) in_next.insert(w.key());
    for (int exp = 1; exp <= 2; ++exp) {
      for (const auto& left : cur.words) {
        for (const auto& z : zk) {
          std::vector<PosSyl> syls = left.syls();
          syls.push_back({uint8_t(k + 1), uint8_t(exp)});
          syls.insert(syls.end(), z.syls().begin(), z.syls().end());
          PositiveWord w(syls);
          if (in_next.insert(w.key()).second) next.words.push_back(w);
        }
      }
    }
    cur = std::move(next);
  }
  return cur;
}

RegularRep build_regular_rep_K3() {
  SpanningSet w2 = enumerate_W(2);
  RegularRep rep;
  rep.dim = int(w2.words.size());
  rep.basis = w2.words;
  if (rep.dim != 21) throw CubicError("W_2 does not have 21 elements");
  std::map<std::string, int> index;
  for (int i = 0; i < rep.dim; ++i) index[rep.basis[size_t(i)].key()] = i;

  SymbolicRing R;
  Sym eng(R);
  auto build = [&](int gen) {
    Mat m(size_t(rep.dim), Vec(size_t(rep.dim)));
    for (int j = 0; j < rep.dim; ++j) {
      std::vector<PosSyl> raw;
      raw.push_back({uint8_t(gen), 1});
      raw.insert(raw.end(), rep.basis[size_t(j)].syls().begin(),
                 rep.basis[size_t(j)].syls().end());
      Sym::Sum s0;
      eng.add_canonical(s0, raw, R.one());
      Sym::Sum nf = eng.normalize_level(s0, 3);
      for (const auto& [w, c] : nf) {
        auto it = index.find(w.key());
        if (it == index.end())
          throw CubicError("normal form leaves the W_2 span: " + w.str());
        m[size_t(it->second)][size_t(j)] += c;
      }
    }
    return m;
  };
  rep.mat_b1 = build(1);
  rep.mat_b2 = build(2);
  return rep;
}

OracleReport verify_algebra_relations(const RegularRep& rep, uint64_t seed) {
  OracleReport report;
  const size_t n = size_t(rep.dim);
  RepOps ops{rep};
  auto add = [&](const std::string& name, bool pass, const std::string& witness = "") {
    report.checks.push_back({name, pass, false, witness});
  };

  // cubic relation Q(rho(b_i)) = 0, column by column
  const MPoly a = MPoly::var("a"), b = MPoly::var("b");
  for (int g = 1; g <= 2; ++g) {
    const Mat& M = g == 1 ? rep.mat_b1 : rep.mat_b2;
    bool pass = true;
    for (size_t j = 0; j < n && pass; ++j) {
      Vec v = unit_vec(n, j);
      Vec v1 = mat_apply(M, v), v2 = mat_apply(M, v1), v3 = mat_apply(M, v2);
      for (size_t i = 0; i < n; ++i) {
        MPoly q = v3[i] - a * v2[i] - b * v1[i] - (i == j ? MPoly::constant(1) : MPoly());
        if (!q.is_zero()) pass = false;
      }
    }
    add("cubic relation Q(rho(b_" + std::to_string(g) + ")) = 0", pass);
  }

  // braid relation
  {
    bool pass = true;
    for (size_t j = 0; j < n && pass; ++j) {
      Vec v = unit_vec(n, j);
      Vec l = mat_apply(rep.mat_b1, mat_apply(rep.mat_b2, mat_apply(rep.mat_b1, v)));
      Vec r = mat_apply(rep.mat_b2, mat_apply(rep.mat_b1, mat_apply(rep.mat_b2, v)));
      for (size_t i = 0; i < n; ++i)
        if (!(l[i] == r[i])) pass = false;
    }
    add("braid relation rho(b1 b2 b1) = rho(b2 b1 b2)", pass);
  }

  SymbolicRing R;
  Sym eng(R);
  auto r0 = r0_sum(eng);
  add("rho(R0) = 0", ops.sum_is_zero(r0));
  auto r1 = left_multiply(eng, 1, r0);
  add("rho(R1) = rho(b1 R0) = 0", ops.sum_is_zero(r1));
  auto r2 = left_multiply(eng, 1, r1);
  add("rho(R2) = rho(b1 R1) = 0", ops.sum_is_zero(r2));

  // b1 R2 = R0 + b R1 + a R2
  {
    auto lhs = left_multiply(eng, 1, r2);
    std::map<PositiveWord, MPoly> diff = lhs;
    auto sub_in = [&](const std::map<PositiveWord, MPoly>& s, const MPoly& c) {
      for (const auto& [w, cc] : s) {
        diff[w] -= cc * c;
        if (diff[w].is_zero()) diff.erase(w);
      }
    };
    sub_in(r0, MPoly::constant(1));
    sub_in(r1, b);
    sub_in(r2, a);
    add("rho(b1 R2 - (R0 + b R1 + a R2)) = 0", ops.sum_is_zero(diff));
  }

  // Prop ordering identity: b2 b1^2 b2 b1 = b1 b2 b1^2 b2
  {
    std::map<PositiveWord, MPoly> diff;
    diff[word_from_text("2 1^2 2 1")] = MPoly::constant(1);
    diff[word_from_text("1 2 1^2 2")] = MPoly::constant(-1);
    add("rho(b2 b1^2 b2 b1) = rho(b1 b2 b1^2 b2)", ops.sum_is_zero(diff));
  }

  // structural C12 / C21 identities
  {
    auto diff = negated_shape_sum(eng, paperdata::c12_identity());
    eng.add_canonical(diff, {{2, 1}, {1, 2}, {2, 2}}, R.one());
    add("C12 identity holds in the representation", ops.sum_is_zero(diff));
  }
  {
    auto diff = negated_shape_sum(eng, paperdata::c21_identity());
    eng.add_canonical(diff, {{2, 2}, {1, 2}, {2, 1}}, R.one());
    add("C21 identity holds in the representation", ops.sum_is_zero(diff));
  }

  // the printed C21 variant must FAIL; check numerically at 5 random points
  {
    auto diff = negated_shape_sum(eng, paperdata::c21_variant_printed());
    eng.add_canonical(diff, {{2, 2}, {1, 2}, {2, 1}}, R.one());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<uint64_t> dist(2, kPrime - 2);
    int witnessed = 0;
    for (int pt = 0; pt < 5; ++pt) {
      Fp av(dist(rng)), bv(dist(rng));
      // numeric 21x21 matrices
      auto num = [&](const Mat& m) {
        std::vector<std::vector<Fp>> out(n, std::vector<Fp>(n));
        for (size_t i = 0; i < n; ++i)
          for (size_t j = 0; j < n; ++j) out[i][j] = eval_fp(m[i][j], av, bv);
        return out;
      };
      auto m1 = num(rep.mat_b1), m2 = num(rep.mat_b2);
      auto applyf = [&](const std::vector<std::vector<Fp>>& m, std::vector<Fp> v) {
        std::vector<Fp> out(n);
        for (size_t j = 0; j < n; ++j) {
          if (v[j].v == 0) continue;
          for (size_t i = 0; i < n; ++i) out[i] = fp_add(out[i], fp_mul(m[i][j], v[j]));
        }
        return out;
      };
      bool nonzero = false;
      for (size_t col = 0; col < n && !nonzero; ++col) {
        std::vector<Fp> acc(n);
        for (const auto& [w, c] : diff) {
          std::vector<Fp> v(n);
          v[col] = Fp(1);
          for (auto it = w.syls().rbegin(); it != w.syls().rend(); ++it)
            for (int e = 0; e < it->exp; ++e) v = applyf(it->index == 1 ? m1 : m2, v);
          Fp cv = eval_fp(c, av, bv);
          for (size_t i = 0; i < n; ++i) acc[i] = fp_add(acc[i], fp_mul(v[i], cv));
        }
        for (size_t i = 0; i < n; ++i)
          if (acc[i].v != 0) nonzero = true;
      }
      witnessed += nonzero;
    }
    CheckResult cr;
    cr.name = "printed C21 variant fails at 5 random points";
    cr.pass = witnessed == 5;
    cr.expected_failure = true;
    cr.witness = std::to_string(witnessed) + "/5 points witness the failure";
    report.checks.push_back(cr);
  }
  return report;
}

OracleReport rank3_soundness(int trials, int maxlen, uint64_t seed) {
  OracleReport report;
  RegularRep rep = build_regular_rep_K3();
  RepOps ops{rep};
  std::map<std::string, int> index;
  for (int i = 0; i < rep.dim; ++i) index[rep.basis[size_t(i)].key()] = i;
  size_t empty_idx = size_t(index.at(PositiveWord{}.key()));

  SymbolicRing R;
  Sym eng(R);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> gi(1, 2), ge(1, 2);
  int mismatches = 0;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<PosSyl> raw;
    int len = 1 + int(rng() % uint64_t(maxlen));
    for (int i = 0; i < len; ++i) raw.push_back({uint8_t(gi(rng)), uint8_t(ge(rng))});
    Sym::Sum s0;
    eng.add_canonical(s0, raw, R.one());
    Sym::Sum nf = eng.normalize_level(s0, 3);
    Vec vec = ops.apply_sum(s0, unit_vec(size_t(rep.dim), empty_idx));
    Vec nfv(size_t(rep.dim));
    for (const auto& [w, c] : nf) nfv[size_t(index.at(w.key()))] += c;
    for (int i = 0; i < rep.dim; ++i)
      if (!(vec[size_t(i)] == nfv[size_t(i)])) {
        ++mismatches;
        break;
      }
  }
  report.checks.push_back({"engine normal forms match the 21-dim representation on " +
                               std::to_string(trials) + " random B_3 words",
                           mismatches == 0, false,
                           mismatches ? std::to_string(mismatches) + " mismatches" : ""});
  return report;
}

ConfluenceReport randomized_confluence_check(int n, int trials, int maxlen, uint64_t seed,
                                             int points) {
  if (n > 5) throw CubicError("randomized_confluence_check: desk scale is n <= 5");
  ConfluenceReport rep;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> gi(1, std::max(1, n - 1)), ge(1, 2);

  std::vector<FamilyPoint> pts;
  for (int i = 0; i < points; ++i) {
    pts.push_back(family_point(Family::TypeI, rng));
    pts.push_back(family_point(Family::TypeII, rng));
  }

  for (int trial = 0; trial < trials; ++trial) {
    std::vector<Syllable> syls;
    int len = 1 + int(rng() % uint64_t(maxlen));
    for (int i = 0; i < len; ++i) syls.push_back({gi(rng), ge(rng)});
    BraidWord w(n, syls);
    ++rep.trials;
    bool bad = false;
    for (const auto& fp : pts) {
      Engine<NumericRing> canonical(fp.ring);
      EngineOptions ropt;
      ropt.randomized = true;
      ropt.seed = rng();
      Engine<NumericRing> randomized(fp.ring, ropt);
      ExtElem va = canonical.trace_raw(w);
      ExtElem vb = randomized.trace_raw(w);
      if (!fp.ring.R->is_zero(fp.ring.R->sub(va, vb))) bad = true;
    }
    if (bad) {
      ++rep.disagreements;
      if (rep.witnesses.size() < 10) rep.witnesses.push_back(w.str());
    }
  }
  return rep;
}

std::string OracleReport::to_json() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < checks.size(); ++i) {
    if (i) os << ",";
    os << "{\"name\":\"" << checks[i].name << "\",\"status\":\""
       << (checks[i].pass ? "pass" : "fail") << "\"";
    if (checks[i].expected_failure) os << ",\"expected_failure\":true";
    if (!checks[i].witness.empty()) os << ",\"witnesses\":\"" << checks[i].witness << "\"";
    os << "}";
  }
  os << "]";
  return os.str();
}

std::string ConfluenceReport::to_json() const {
  std::ostringstream os;
  os << "{\"trials\":" << trials << ",\"disagreements\":" << disagreements << ",\"witnesses\":[";
  for (size_t i = 0; i < witnesses.size(); ++i) {
    if (i) os << ",";
    os << "\"" << witnesses[i] << "\"";
  }
  os << "]}";
  return os.str();
}

}  // namespace cubic
