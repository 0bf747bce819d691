#include "doctest.h"

#include <random>
#include <sstream>

#include "cubic/engine.hpp"
#include "cubic/ring.hpp"

using namespace cubic;

namespace {

using Sym = Engine<SymbolicRing>;
using Sum = Sym::Sum;

PositiveWord pw(std::initializer_list<std::pair<int, int>> syls) {
  std::vector<PosSyl> v;
  for (auto [i, e] : syls) v.push_back({uint8_t(i), uint8_t(e)});
  return PositiveWord(v);
}

Sum one_word(Sym& eng, const PositiveWord& w) {
  Sum s;
  s.emplace(w, eng.ring().one());
  return s;
}

}  // namespace

TEST_CASE("positivize") {
  SymbolicRing R;
  Sym eng(R);
  SUBCASE("inverse generator") {
    Sum s = eng.positivize(parse_braid("-1"));
    REQUIRE(s.size() == 3);
    CHECK(s.at(pw({{1, 2}})) == parse_poly("1"));
    CHECK(s.at(pw({{1, 1}})) == parse_poly("0-a"));
    CHECK(s.at(pw({})) == parse_poly("0-b"));
  }
  SUBCASE("cube") {
    Sum s = eng.positivize(parse_braid("1^3"));
    REQUIRE(s.size() == 3);
    CHECK(s.at(pw({{1, 2}})) == parse_poly("a"));
    CHECK(s.at(pw({{1, 1}})) == parse_poly("b"));
    CHECK(s.at(pw({})) == parse_poly("1"));
  }
  SUBCASE("identity on a generator") {
    Sum s = eng.positivize(parse_braid("1"));
    REQUIRE(s.size() == 1);
    CHECK(s.at(pw({{1, 1}})) == parse_poly("1"));
  }
  SUBCASE("inverse square against direct expansion") {
    // (b^2 - a b - b(eta))^2 reduced by the cubic, b_1^{-2}
    Sum s = eng.positivize(parse_braid("-1^2"));
    Sum direct;
    // (b1^-1)^2 = b1^-1 * b1^-1; expand one factor over the other
    Sum inv = eng.positivize(parse_braid("-1"));
    for (const auto& [w1, c1] : inv)
      for (const auto& [w2, c2] : inv) {
        std::vector<PosSyl> raw = w1.syls();
        raw.insert(raw.end(), w2.syls().begin(), w2.syls().end());
        eng.add_canonical(direct, raw, c1 * c2);
      }
    CHECK(s == direct);
  }
}

TEST_CASE("apply_rule") {
  SymbolicRing R;
  Sym eng(R);
  SUBCASE("C1") {
    Sum s = eng.apply_rule(one_word(eng, pw({{2, 1}, {1, 1}, {2, 1}})), Rule::C1,
                           pw({{2, 1}, {1, 1}, {2, 1}}), 0);
    REQUIRE(s.size() == 1);
    CHECK(s.count(pw({{1, 1}, {2, 1}, {1, 1}})) == 1);
  }
  SUBCASE("C12 matches the structural identity") {
    PositiveWord w = pw({{2, 1}, {1, 2}, {2, 2}});
    Sum s = eng.apply_rule(one_word(eng, w), Rule::C12, w, 0);
    // l^2 h^2 l + a(h l^2 h - l h^2 l) + b(h l^2 - h^2 l)
    CHECK(s.at(pw({{1, 2}, {2, 2}, {1, 1}})) == parse_poly("1"));
    CHECK(s.at(pw({{2, 1}, {1, 2}, {2, 1}})) == parse_poly("a"));
    CHECK(s.at(pw({{1, 1}, {2, 2}, {1, 1}})) == parse_poly("0-a"));
    CHECK(s.at(pw({{2, 1}, {1, 2}})) == parse_poly("b"));
    CHECK(s.at(pw({{2, 2}, {1, 1}})) == parse_poly("0-b"));
  }
  SUBCASE("Pij") {
    PositiveWord w = pw({{1, 1}, {3, 1}});
    Sum s = eng.apply_rule(one_word(eng, w), Rule::Pij, w, 0);
    REQUIRE(s.size() == 1);
    CHECK(s.count(pw({{3, 1}, {1, 1}})) == 1);
  }
  SUBCASE("pattern mismatch") {
    PositiveWord w = pw({{1, 1}, {2, 1}});
    CHECK_THROWS_AS(eng.apply_rule(one_word(eng, w), Rule::Pij, w, 0), EngineError);
    CHECK_THROWS_AS(eng.apply_rule(one_word(eng, w), Rule::C1, w, 0), EngineError);
  }
}

TEST_CASE("normalize_level") {
  SymbolicRing R;
  Sym eng(R);
  SUBCASE("braid relation word") {
    Sum s = eng.normalize_level(one_word(eng, pw({{2, 1}, {1, 1}, {2, 1}})), 3);
    REQUIRE(s.size() == 1);
    CHECK(s.count(pw({{1, 1}, {2, 1}, {1, 1}})) == 1);
  }
  SUBCASE("C2 word lands on the 21-term tail") {
    Sum s = eng.normalize_level(one_word(eng, pw({{2, 1}, {1, 2}, {2, 1}})), 3);
    CHECK(s.size() == 21);
    for (const auto& term : paperdata::c2_tail()) {
      std::vector<PosSyl> raw;
      for (auto [hl, e] : term.factors) raw.push_back({uint8_t(1 + hl), uint8_t(e)});
      auto it = s.find(PositiveWord(raw));
      REQUIRE(it != s.end());
      CHECK(it->second == -paperdata::table1(term.tag));
    }
  }
  SUBCASE("already normal") {
    Sum s = eng.normalize_level(one_word(eng, pw({{1, 1}, {2, 1}})), 3);
    REQUIRE(s.size() == 1);
    CHECK(s.count(pw({{1, 1}, {2, 1}})) == 1);
  }
  SUBCASE("every output word has at most one top syllable") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> gi(1, 2), ge(1, 2);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<PosSyl> raw;
      int len = 1 + int(rng() % 7);
      for (int i = 0; i < len; ++i) raw.push_back({uint8_t(gi(rng)), uint8_t(ge(rng))});
      Sum s0;
      eng.add_canonical(s0, raw, R.one());
      Sum s = eng.normalize_level(s0, 3);
      for (const auto& [w, c] : s) {
        int count = 0;
        for (size_t i = 0; i < w.size(); ++i) count += w[i].index == 2;
        CHECK(count <= 1);
      }
    }
  }
}

TEST_CASE("markov_step") {
  SymbolicRing R;
  Sym eng(R);
  SUBCASE("z and t moves") {
    Sum s1 = eng.markov_step(one_word(eng, pw({{1, 1}})), 2);
    CHECK(s1.at(pw({})) == parse_poly("z"));
    Sum s2 = eng.markov_step(one_word(eng, pw({{1, 2}})), 2);
    CHECK(s2.at(pw({})) == parse_poly("t"));
    Sum s3 = eng.markov_step(one_word(eng, pw({{1, 1}, {2, 1}, {1, 1}})), 3);
    CHECK(s3.at(pw({{1, 2}})) == parse_poly("z"));
  }
  SUBCASE("contract violation") {
    Sum bad = one_word(eng, pw({{1, 1}, {2, 1}, {1, 1}, {2, 1}}));
    CHECK_THROWS_AS(eng.markov_step(bad, 3), EngineError);
  }
}

TEST_CASE("trace_raw basics") {
  SymbolicRing R;
  Sym eng(R);
  CHECK(eng.trace_raw(parse_braid("", 1)) == parse_poly("1"));
  CHECK(eng.trace_raw(parse_braid("1")) == parse_poly("z"));
  CHECK(eng.trace_raw(parse_braid("1^3")) == parse_poly("a*t + b*z + 1"));
  CHECK(eng.trace_raw(parse_braid("1^2")) == parse_poly("t"));
  // a braid-relation sanity pair in B_3
  CHECK(eng.trace_raw(parse_braid("1 2 1")) == eng.trace_raw(parse_braid("2 1 2")));
}

TEST_CASE("degree bound in (z, t)") {
  SymbolicRing R;
  Sym eng(R);
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> gi(1, 3), ge(-2, 2);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Syllable> syls;
    int len = 1 + int(rng() % 8);
    for (int i = 0; i < len; ++i) {
      int e = ge(rng);
      if (e == 0) e = 1;
      syls.push_back({gi(rng), e});
    }
    BraidWord w(4, syls);
    MPoly tr = eng.trace_raw(w);
    CHECK(tr.integer_coefficients());
    for (const auto& [exps, c] : tr.terms()) {
      long zd = 0, td = 0;
      for (size_t i = 0; i < tr.vars().size(); ++i) {
        if (tr.vars()[i] == "z") zd = exps[i];
        if (tr.vars()[i] == "t") td = exps[i];
      }
      CHECK(zd + td <= w.strands() - 1);
    }
  }
}

TEST_CASE("step budget aborts with a diagnostic") {
  SymbolicRing R;
  EngineOptions opt;
  opt.step_budget = 3;
  Sym eng(R, opt);
  CHECK_THROWS_AS(eng.trace_raw(parse_braid("1 2 1 2 1 2 1 2")), EngineError);
}

TEST_CASE("trace log is tab separated") {
  SymbolicRing R;
  std::ostringstream log;
  EngineOptions opt;
  opt.trace_log = &log;
  Sym eng(R, opt);
  eng.trace_raw(parse_braid("2 1 2"));
  CHECK(log.str().find("C1\t") != std::string::npos);
  CHECK(log.str().find("R9\t") != std::string::npos);
}

TEST_CASE("numeric engine agrees with symbolic trace") {
  SymbolicRing SR;
  Sym sym(SR);
  std::mt19937_64 rng(71);
  RingPoint pt = make_ring_point(paperdata::h_modulus(), "a", "b", rng);
  // arbitrary z, t values (trace identities are not needed here)
  NumericRing NR{std::make_shared<ExtRing>(pt.ring), pt.bind};
  NR.bind["z"] = pt.ring.from_fp(Fp(12345));
  NR.bind["t"] = pt.ring.from_fp(Fp(67890));
  Engine<NumericRing> num(NR);
  for (const char* text : {"1^3", "1 -2 1 -2", "1^2 2^2 -1 2", "-1 2 -1 2^3"}) {
    BraidWord w = parse_braid(text);
    MPoly tr = sym.trace_raw(w);
    ExtElem sym_val = pt.ring.eval(tr, NR.bind);
    ExtElem num_val = num.trace_raw(w);
    CHECK(pt.ring.is_zero(pt.ring.sub(sym_val, num_val)));
  }
}
