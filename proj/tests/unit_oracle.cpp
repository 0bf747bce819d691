#include "doctest.h"

#include "cubic/oracle.hpp"
#include "cubic/paperdata.hpp"

using namespace cubic;

TEST_CASE("spanning sets W_n") {
  SpanningSet w0 = enumerate_W(0);
  REQUIRE(w0.words.size() == 1);
  CHECK(w0.words[0].empty());

  SpanningSet w1 = enumerate_W(1);
  CHECK(w1.words.size() == 3);  // 1, b1, b1^2

  SpanningSet w2 = enumerate_W(2);
  CHECK(w2.words.size() == 21);  // = dim K_3
}

TEST_CASE("regular representation of K_3") {
  RegularRep rep = build_regular_rep_K3();
  CHECK(rep.dim == 21);
  // the column of the empty basis word under b1 is the unit vector at b1
  int j = -1, target = -1;
  for (int i = 0; i < rep.dim; ++i) {
    if (rep.basis[size_t(i)].empty()) j = i;
    if (rep.basis[size_t(i)].str() == "1") target = i;
  }
  REQUIRE(j >= 0);
  REQUIRE(target >= 0);
  for (int i = 0; i < rep.dim; ++i) {
    if (i == target) {
      CHECK(rep.mat_b1[size_t(i)][size_t(j)] == MPoly::constant(1));
    } else {
      CHECK(rep.mat_b1[size_t(i)][size_t(j)].is_zero());
    }
  }
}

TEST_CASE("algebra relation certification") {
  RegularRep rep = build_regular_rep_K3();
  OracleReport report = verify_algebra_relations(rep);
  for (const auto& c : report.checks) {
    INFO(c.name << " " << c.witness);
    CHECK(c.pass);
  }
  CHECK(report.all_pass());
  // the expected-failure specimen is present and flagged
  bool found = false;
  for (const auto& c : report.checks)
    if (c.expected_failure) found = true;
  CHECK(found);
  CHECK(report.to_json().find("expected_failure") != std::string::npos);
}

TEST_CASE("engine normal forms match the representation") {
  OracleReport report = rank3_soundness(150, 10, 12345);
  for (const auto& c : report.checks) {
    INFO(c.name << " " << c.witness);
    CHECK(c.pass);
  }
}

TEST_CASE("randomized strategies agree with the canonical one") {
  ConfluenceReport r3 = randomized_confluence_check(3, 60, 10, 991, 2);
  CHECK(r3.trials == 60);
  CHECK(r3.disagreements == 0);
  ConfluenceReport r4 = randomized_confluence_check(4, 25, 8, 992, 2);
  CHECK(r4.disagreements == 0);
  CHECK_THROWS_AS(randomized_confluence_check(6, 1, 4, 1, 1), CubicError);
}

TEST_CASE("trivial word agrees under both strategies") {
  ConfluenceReport r = randomized_confluence_check(2, 3, 1, 5, 1);
  CHECK(r.disagreements == 0);
}
