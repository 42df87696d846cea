#include <doctest.h>

#include "wcayley/sampling.hpp"
#include "wcayley/ydist.hpp"

using namespace wcayley;

namespace {

ReducedWord W(const char* text) { return ReducedWord::parse(text); }

const WOracle& oracle() {
  static WOracle instance(WOracleConfig{WordSchedule{1}, 16, 64});
  return instance;
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(Rational::of(2, 4) == Rational{1, 2});
  CHECK(Rational::of(0, 5) == Rational{0, 1});
  CHECK(rational_less(Rational{1, 7}, Rational{1, 6}));
  CHECK(!rational_less(Rational{2, 14}, Rational{1, 7}));
}

TEST_CASE("y_length_dp examples") {
  CHECK(y_length_dp(oracle(), W("")).count() == 0);
  for (long n : {1L, 3L, 17L, 60L}) {
    CHECK(y_length_dp(oracle(), oracle().schedule().v(n)).count() == 1);
  }

  const auto acb = y_length_dp(oracle(), W("acb"));
  CHECK(acb.count() == 2);
  REQUIRE(acb.factors.size() == 2);
  CHECK(acb.factors[0] == W("ac"));
  CHECK(acb.factors[1] == W("b"));

  CHECK(y_length_dp(oracle(), W("a")).count() == 1);
  CHECK(y_length_dp(oracle(), W("aa")).count() == 1);
  CHECK(y_length_dp(oracle(), W("aaa")).count() == 2);
}

TEST_CASE("factorizations are graphical W-decompositions") {
  Rng rng(2718);
  for (int it = 0; it < 400; ++it) {
    const auto w = random_reduced_word(rng, 1 + rng.below(80), false);
    for (const auto& f :
         {y_length_dp(oracle(), w), y_length_greedy(oracle(), w)}) {
      std::vector<LetterCode> glued;
      for (const auto& z : f.factors) {
        CHECK(oracle().is_w_word(z));
        glued.insert(glued.end(), z.codes().begin(), z.codes().end());
      }
      CHECK(std::equal(glued.begin(), glued.end(), w.codes().begin(),
                       w.codes().end()));
      CHECK(glued.size() == w.size());
    }
  }
}

TEST_CASE("greedy equals dp on random words") {
  Rng rng(31415);
  for (int it = 0; it < 2000; ++it) {
    const auto w = random_reduced_word(rng, 1 + rng.below(120), false);
    const auto dp = y_length_dp(oracle(), w).count();
    CHECK(dp == y_length_greedy(oracle(), w).count());
    CHECK(dp == y_length(oracle(), w));
  }
}

TEST_CASE("y_dist examples") {
  CHECK(y_dist(oracle(), W("abc"), W("abc")) == 0);
  for (long n : {1L, 2L, 9L}) {
    CHECK(y_dist(oracle(), W(""), oracle().schedule().w(n)) == 1);
  }
  CHECK(y_dist(oracle(), W(""), power(W("ab"), 14)) >= 2);
  // abBc reduces to ac; (ac)^-1 c = CAc needs the two factors CA and c
  CHECK(y_dist(oracle(), W("abBc"), W("c")) == 2);
}

TEST_CASE("y_dist metric properties and left invariance") {
  Rng rng(161803);
  for (int it = 0; it < 400; ++it) {
    const auto x = random_reduced_word(rng, rng.below(50), false);
    const auto y = random_reduced_word(rng, rng.below(50), false);
    const auto z = random_reduced_word(rng, rng.below(50), false);
    const auto g = random_reduced_word(rng, rng.below(30), false);
    const auto dxy = y_dist(oracle(), x, y);
    CHECK(dxy == y_dist(oracle(), y, x));
    CHECK(y_dist(oracle(), x, z) <= dxy + y_dist(oracle(), y, z));
    CHECK((dxy == 0) == (x == y));
    CHECK(y_dist(oracle(), multiply(g, x), multiply(g, y)) == dxy);
  }
}

TEST_CASE("subadditivity of power lengths") {
  Rng rng(55);
  for (int it = 0; it < 60; ++it) {
    const auto g = random_reduced_word(rng, 1 + rng.below(6), false);
    const long m = 1 + static_cast<long>(rng.below(6));
    const long n = 1 + static_cast<long>(rng.below(6));
    CHECK(y_length(oracle(), power(g, m + n)) <=
          y_length(oracle(), power(g, m)) + y_length(oracle(), power(g, n)));
  }
}

TEST_CASE("non-properness witness") {
  for (long n = 1; n <= 64; ++n) {
    const auto v = oracle().schedule().v(n);
    CHECK(y_dist(oracle(), W(""), v) == 1);
    CHECK(v.size() == static_cast<std::size_t>(n));  // L0 = 1
  }
}

TEST_CASE("power_lengths bounds and examples") {
  const auto est_a = power_lengths(oracle(), W("a"), 21);
  for (const auto& s : est_a.samples) {
    CHECK(static_cast<long>(s.y_len) >= s.n / 7);
  }
  CHECK(est_a.lower_bound_applies);
  CHECK(!rational_less(est_a.upper, Rational{1, 7}));
  CHECK(est_a.lower == Rational{1, 7});  // attained at n = 7

  // w(1) = ac is a W-word with W-word powers: never loxodromic data
  const auto est_ac = power_lengths(oracle(), W("ac"), 20);
  for (const auto& s : est_ac.samples) CHECK(s.y_len == 1);
  CHECK(est_ac.upper == Rational{1, 20});
  CHECK(!est_ac.lower_bound_applies);
  CHECK(est_ac.lower == Rational{0, 1});

  CHECK_THROWS_AS(power_lengths(oracle(), W(""), 5), std::domain_error);
  CHECK_THROWS_AS(power_lengths(oracle(), W("a"), 0), std::invalid_argument);
}

TEST_CASE("y_length_at_most early exit") {
  Rng rng(9090);
  for (int it = 0; it < 200; ++it) {
    const auto w = random_reduced_word(rng, 1 + rng.below(60), false);
    const std::size_t exact = y_length(oracle(), w);
    const std::size_t limit = rng.below(exact + 3);
    const auto capped = y_length_at_most(oracle(), w, limit);
    if (exact <= limit) {
      REQUIRE(capped.has_value());
      CHECK(*capped == exact);
    } else {
      CHECK(!capped.has_value());
    }
  }
}

TEST_CASE("SubwordYLengths matches direct lengths") {
  Rng rng(1212);
  for (int it = 0; it < 60; ++it) {
    const auto w = random_reduced_word(rng, 1 + rng.below(60), false);
    const SubwordYLengths table(oracle(), w);
    for (std::size_t s = 0; s <= w.size(); ++s) {
      for (std::size_t t = s; t <= w.size(); ++t) {
        CHECK(table.dist(s, t) == y_length(oracle(), w.subword(s, t)));
      }
    }
  }
}
