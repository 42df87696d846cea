#include <doctest.h>

#include <algorithm>

#include "wcayley/acylindricity.hpp"
#include "wcayley/sampling.hpp"

using namespace wcayley;

namespace {

ReducedWord W(const char* text) { return ReducedWord::parse(text); }

const WOracle& oracle() {
  static WOracle instance(WOracleConfig{WordSchedule{1}, 16, 64});
  return instance;
}

bool contains_member(const CensusReport& report, const ReducedWord& g) {
  return std::any_of(report.members.begin(), report.members.end(),
                     [&](const CensusMember& m) { return m.g == g; });
}

}  // namespace

TEST_CASE("certificate constants") {
  const auto p = AcylParams::make(1, 1);
  CHECK(p.separation == 8500);
  CHECK(p.max_members == 85);
  CHECK(p.exponent_cap == 42);

  const auto q = AcylParams::make(2, 1);
  CHECK(q.separation == 10800);
  CHECK(q.max_members == 99);
  CHECK(q.exponent_cap == 49);

  const auto r = AcylParams::make(1, 2);
  CHECK(r.separation == 100 * 9 * 23);
  CHECK(r.max_members == 14 * 10 + 1);
  CHECK(r.exponent_cap == 70);

  CHECK_THROWS_AS(AcylParams::make(0, 1), std::invalid_argument);
}

TEST_CASE("displacement examples") {
  Rng rng(7);
  const auto p = random_reduced_word(rng, 12, false);
  CHECK(displacement(oracle(), W(""), p) == 0);
  for (long n : {1L, 5L}) {
    CHECK(displacement(oracle(), oracle().schedule().v(n), W("")) == 1);
  }
  for (int it = 0; it < 50; ++it) {
    const auto g = random_reduced_word(rng, 1 + rng.below(10), false);
    const auto q = random_reduced_word(rng, rng.below(10), false);
    const auto h = random_reduced_word(rng, rng.below(10), false);
    const auto conj = multiply(multiply(h, g), invert(h));
    CHECK(displacement(oracle(), g, q) ==
          displacement(oracle(), conj, multiply(h, q)));
  }
}

TEST_CASE("census contrast witness: no separation, unbounded membership") {
  // x = y = 1 removes the separation requirement; the qualifying set grows
  // with the cap since every v(n) displaces the basepoint by exactly 1.
  const auto params = AcylParams::make(1, 1);
  CensusOptions small;
  small.cap = 4;
  CensusOptions larger;
  larger.cap = 6;
  const auto a = census(oracle(), W(""), W(""), params, small);
  const auto b = census(oracle(), W(""), W(""), params, larger);
  CHECK(!a.separation_ok);
  CHECK(a.complete);
  CHECK(b.members.size() > a.members.size());
  for (long n = 1; n <= 6; ++n) {
    CHECK(contains_member(b, oracle().schedule().v(n)));
  }
  // every member is a c-free W-word here (displacement 1 from the identity)
  for (const auto& m : b.members) {
    CHECK(m.disp_x == 1);
    CHECK(oracle().is_w_word(m.g));
  }
}

TEST_CASE("census conjugation equivariance at small caps") {
  const auto params = AcylParams::make(1, 1);
  Rng rng(1001);
  const auto x = random_reduced_word(rng, 6, false);
  const auto y = random_reduced_word(rng, 8, false);
  const auto h = random_reduced_word(rng, 2, true);

  CensusOptions base;
  base.cap = 5;
  CensusOptions wide;
  wide.cap = 5 + 2 * static_cast<long>(h.size());

  const auto plain = census(oracle(), x, y, params, base);
  const auto moved =
      census(oracle(), multiply(h, x), multiply(h, y), params, wide);
  for (const auto& m : plain.members) {
    const auto conj = multiply(multiply(h, m.g), invert(h));
    CHECK(contains_member(moved, conj));
  }

  const auto moved_small =
      census(oracle(), multiply(h, x), multiply(h, y), params, base);
  const auto plain_wide = census(oracle(), x, y, params, wide);
  for (const auto& m : moved_small.members) {
    const auto back = multiply(multiply(invert(h), m.g), h);
    CHECK(contains_member(plain_wide, back));
  }
}

TEST_CASE("census along a periodic axis finds the root powers") {
  // y = (ab)^17000 has |y|_Y = 8500 = L(1), so the pair (1, y) is separated.
  // The only short c-free g with both displacements <= 1 are the powers of
  // ab whose Y-length stays at 1, namely (ab)^{+-1} and (ab)^{+-2}.
  const auto params = AcylParams::make(1, 1);
  const auto y = power(W("ab"), 17000);
  REQUIRE(y_dist(oracle(), W(""), y) == 8500);

  CensusOptions opts;
  opts.cap = 10;
  const auto report = census(oracle(), W(""), y, params, opts);
  CHECK(report.separation_ok);
  CHECK(report.complete);
  REQUIRE(report.members.size() == 4);
  CHECK(contains_member(report, W("ab")));
  CHECK(contains_member(report, W("abab")));
  CHECK(contains_member(report, W("BA")));
  CHECK(contains_member(report, W("BABA")));

  const auto rs = root_structure(report);
  REQUIRE(rs.has_value());
  CHECK((rs->root == W("ab") || rs->root == W("BA")));
  for (long e : rs->exponents) {
    CHECK(std::abs(e) <= 2);
  }
}

TEST_CASE("census budget exhaustion flags incompleteness") {
  const auto params = AcylParams::make(1, 1);
  CensusOptions opts;
  opts.cap = 8;
  opts.enumeration_budget = 100;
  const auto report = census(oracle(), W(""), W(""), params, opts);
  CHECK(!report.complete);
  CHECK_THROWS_AS(root_structure(report), std::invalid_argument);
}

TEST_CASE("root_structure") {
  CensusReport report;
  report.params = AcylParams::make(1, 1);
  report.complete = true;

  SUBCASE("fewer than two members") {
    report.members = {{W("ab"), 1, 1}};
    CHECK(!root_structure(report).has_value());
  }

  SUBCASE("powers of one root") {
    report.members = {{W("baB"), 1, 1}, {W("baaB"), 1, 1}};
    const auto rs = root_structure(report);
    REQUIRE(rs.has_value());
    CHECK(rs->root == W("baB"));
    CHECK(rs->exponents == std::vector<long>{1, 2});
  }

  SUBCASE("inverse powers fold into signed exponents") {
    report.members = {{W("ab"), 1, 1}, {W("BABA"), 1, 1}};
    const auto rs = root_structure(report);
    REQUIRE(rs.has_value());
    CHECK(rs->root == W("ab"));
    CHECK(rs->exponents == std::vector<long>{1, -2});
  }

  SUBCASE("distinct roots are a loud counterexample") {
    report.members = {{W("a"), 1, 1}, {W("b"), 1, 1}};
    CHECK_THROWS_AS(root_structure(report), CensusViolation);
  }

  SUBCASE("exponent cap violations are loud") {
    report.params.exponent_cap = 1;
    report.members = {{W("ab"), 1, 1}, {W("abab"), 1, 1}};
    CHECK_THROWS_AS(root_structure(report), CensusViolation);
  }
}
