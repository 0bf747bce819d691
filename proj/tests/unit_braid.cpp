#include "doctest.h"

#include <random>

#include "cubic/braid.hpp"

using namespace cubic;

namespace {

BraidWord random_word(std::mt19937_64& rng, int strands, int len) {
  std::uniform_int_distribution<int> gi(1, strands - 1);
  std::uniform_int_distribution<int> ge(-2, 2);
  std::vector<Syllable> syls;
  for (int i = 0; i < len; ++i) {
    int e = ge(rng);
    if (e == 0) e = 1;
    syls.push_back({gi(rng), e});
  }
  return BraidWord(strands, syls);
}

}  // namespace

TEST_CASE("parse_braid") {
  BraidWord w = parse_braid("1^3");
  CHECK(w.strands() == 2);
  REQUIRE(w.syllables().size() == 1);
  CHECK(w.syllables()[0].index == 1);
  CHECK(w.syllables()[0].exponent == 3);

  BraidWord fig8 = parse_braid("1 -2 1 -2");
  CHECK(fig8.strands() == 3);
  CHECK(fig8.syllables().size() == 4);
  CHECK(fig8.syllables()[1].exponent == -1);

  CHECK_THROWS_AS(parse_braid("1 0 2"), ParseError);
  CHECK_THROWS_AS(parse_braid("1 x"), ParseError);
  CHECK_THROWS_AS(parse_braid("1 2^-1"), ParseError);
  CHECK_THROWS_AS(parse_braid("1 3", 2), ParseError);
  CHECK(parse_braid("1", 4).strands() == 4);
}

TEST_CASE("syllable merging is canonical") {
  BraidWord m = parse_braid("1 1 2 -2 1^2");
  // 1·1 merges to 1^2, 2·2^{-1} cancels, the tail 1^2 then merges again
  CHECK(m.syllables().size() == 1);
  CHECK(m.syllables()[0].exponent == 4);
  CHECK(exponent_sum(m) == 4);
}

TEST_CASE("exponent sums") {
  CHECK(exponent_sum(parse_braid("1^3")) == 3);
  CHECK(exponent_sum(parse_braid("1 -2 1 -2")) == 0);
  CHECK(exponent_sum(parse_braid("-1^2 2^2 -1 2")) == 0);
}

TEST_CASE("closure components and epsilon") {
  ClosureData tref = closure_components(parse_braid("1^3"));
  CHECK(tref.components == 1);
  CHECK(tref.epsilon == 2);

  ClosureData triv = closure_components(parse_braid("", 3));
  CHECK(triv.components == 3);
  CHECK(triv.epsilon == 2);

  ClosureData unknot = closure_components(parse_braid("1"));
  CHECK(unknot.components == 1);
  CHECK(unknot.epsilon == 2);

  ClosureData hopf = closure_components(parse_braid("1^2"));
  CHECK(hopf.components == 2);
  CHECK(hopf.epsilon == 1);
}

TEST_CASE("reverse and dagger") {
  BraidWord w = parse_braid("1 2^2");
  CHECK(reverse_word(w).str() == "2^2 1");
  BraidWord pal = parse_braid("1 2 1");
  CHECK(reverse_word(pal).str() == pal.str());
  CHECK(reverse_word(parse_braid("")).empty());

  CHECK(dagger_word(parse_braid("1 -2")).str() == "-1 2");
  CHECK(dagger_word(parse_braid("1^3")).str() == "-1^3");
}

TEST_CASE("properties on random words") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    BraidWord w = random_word(rng, 4, 8);
    ClosureData c = closure_components(w);
    CHECK(closure_components(reverse_word(w)).components == c.components);
    CHECK(closure_components(dagger_word(w)).components == c.components);
    CHECK(exponent_sum(dagger_word(w)) == -exponent_sum(w));
    CHECK(dagger_word(dagger_word(w)).str() == w.str());
    if (c.components == 1) {
      // permutation parity forces e = n-1 mod 2 for one-component closures
      CHECK((exponent_sum(w) - (w.strands() - 1)) % 2 == 0);
    }
  }
}
