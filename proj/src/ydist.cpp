#include "wcayley/ydist.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>

#include "wcayley/sampling.hpp"

namespace wcayley {

Rational Rational::of(long long n, long long d) {
  assert(d > 0);
  const long long g = std::gcd(n, d);
  return g ? Rational{n / g, d / g} : Rational{0, 1};
}

bool rational_less(const Rational& x, const Rational& y) {
  return x.num * y.den < y.num * x.den;
}

WFactorization y_length_dp(const WOracle& oracle, const ReducedWord& w) {
  const auto codes = w.codes();
  const std::size_t n = codes.size();
  WFactorization out;
  out.method = FactorizationMethod::dp;
  if (n == 0) return out;

  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  // run_start[i]: smallest j with w[j..i) of uniform sign (i >= 1).
  std::vector<std::size_t> run_start(n + 1, 0);
  for (std::size_t i = 2; i <= n; ++i) {
    run_start[i] = is_positive(codes[i - 1]) == is_positive(codes[i - 2])
                       ? run_start[i - 1]
                       : i - 1;
  }

  std::vector<std::size_t> best(n + 1, kInf);
  std::vector<std::size_t> prev(n + 1, 0);
  best[0] = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = run_start[i]; j < i; ++j) {
      if (best[j] == kInf || best[j] + 1 >= best[i]) continue;
      if (oracle.is_w_word_span(codes.subspan(j, i - j))) {
        best[i] = best[j] + 1;
        prev[i] = j;
      }
    }
    assert(best[i] != kInf);  // single letters are W-words
  }

  std::vector<std::size_t> cuts;
  for (std::size_t i = n; i > 0; i = prev[i]) cuts.push_back(i);
  cuts.push_back(0);
  std::reverse(cuts.begin(), cuts.end());
  out.factors.reserve(cuts.size() - 1);
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
    out.factors.push_back(w.subword(cuts[k], cuts[k + 1]));
  return out;
}

WFactorization y_length_greedy(const WOracle& oracle, const ReducedWord& w) {
  WFactorization out;
  out.method = FactorizationMethod::greedy;
  const auto codes = w.codes();
  std::size_t pos = 0;
  while (pos < codes.size()) {
    const std::size_t len = oracle.longest_w_prefix_span(codes, pos);
    out.factors.push_back(w.subword(pos, pos + len));
    pos += len;
  }
  return out;
}

std::size_t y_length(const WOracle& oracle, const ReducedWord& w) {
  const auto codes = w.codes();
  std::size_t pos = 0;
  std::size_t count = 0;
  while (pos < codes.size()) {
    pos += oracle.longest_w_prefix_span(codes, pos);
    ++count;
  }
  return count;
}

std::size_t y_dist(const WOracle& oracle, const ReducedWord& x,
                   const ReducedWord& y) {
  return y_length(oracle, multiply(invert(x), y));
}

std::optional<std::size_t> y_length_at_most(const WOracle& oracle,
                                            const ReducedWord& w,
                                            std::size_t limit) {
  const auto codes = w.codes();
  std::size_t pos = 0;
  std::size_t count = 0;
  while (pos < codes.size()) {
    if (count == limit) return std::nullopt;
    pos += oracle.longest_w_prefix_span(codes, pos);
    ++count;
  }
  return count;
}

std::optional<std::size_t> y_dist_at_most(const WOracle& oracle,
                                          const ReducedWord& x,
                                          const ReducedWord& y,
                                          std::size_t limit) {
  return y_length_at_most(oracle, multiply(invert(x), y), limit);
}

SubwordYLengths::SubwordYLengths(const WOracle& oracle, const ReducedWord& w)
    : n_(w.size()), maxlen_(w.size()) {
  const auto codes = w.codes();
  for (std::size_t p = 0; p < n_; ++p)
    maxlen_[p] = static_cast<std::uint32_t>(oracle.longest_w_prefix_span(codes, p));

  std::size_t levels = 1;
  while ((std::size_t{1} << levels) <= n_) ++levels;
  up_.assign(levels, std::vector<std::uint32_t>(n_ + 1));
  for (std::size_t p = 0; p < n_; ++p)
    up_[0][p] = static_cast<std::uint32_t>(
        std::min(p + maxlen_[p], n_));
  up_[0][n_] = static_cast<std::uint32_t>(n_);
  for (std::size_t j = 1; j < levels; ++j) {
    for (std::size_t p = 0; p <= n_; ++p) up_[j][p] = up_[j - 1][up_[j - 1][p]];
  }
}

std::size_t SubwordYLengths::dist(std::size_t s, std::size_t t) const {
  assert(s <= t && t <= n_);
  if (s == t) return 0;
  // Count greedy jumps from s until reaching >= t; stopping short of a jump
  // target is always possible because W-words are factor-closed.
  std::size_t jumps = 0;
  std::size_t p = s;
  for (std::size_t j = up_.size(); j-- > 0;) {
    if (up_[j][p] < t) {
      p = up_[j][p];
      jumps += std::size_t{1} << j;
    }
  }
  return jumps + 1;
}

TranslationLengthEstimate power_lengths(const WOracle& oracle,
                                        const ReducedWord& g, long max_power,
                                        int workers) {
  if (g.empty())
    throw std::domain_error("translation length of the identity is undefined");
  if (max_power < 1) throw std::invalid_argument("max_power must be >= 1");

  TranslationLengthEstimate est;
  est.g = g;
  est.samples.resize(static_cast<std::size_t>(max_power));
  parallel_for(static_cast<std::size_t>(max_power), workers, [&](std::size_t i) {
    const long n = static_cast<long>(i) + 1;
    est.samples[i] = PowerSample{n, y_length(oracle, power(g, n))};
  });

  est.upper = Rational::of(static_cast<long long>(est.samples[0].y_len), 1);
  for (const auto& s : est.samples) {
    const Rational r = Rational::of(static_cast<long long>(s.y_len), s.n);
    if (rational_less(r, est.upper)) est.upper = r;
  }

  est.lower_bound_applies =
      std::none_of(g.codes().begin(), g.codes().end(),
                   [](LetterCode c) { return base_of(c) == 2; });
  est.lower = Rational{0, 1};
  if (est.lower_bound_applies) {
    for (const auto& s : est.samples) {
      const Rational r = Rational::of(s.n / 7, s.n);
      if (rational_less(est.lower, r)) est.lower = r;
    }
  }
  return est;
}

}  // namespace wcayley
