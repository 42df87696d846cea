#ifndef WCAYLEY_YDIST_HPP
#define WCAYLEY_YDIST_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "wcayley/woracle.hpp"

namespace wcayley {

struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational of(long long n, long long d);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

// a/b < c/d without overflow concerns at our magnitudes
bool rational_less(const Rational& x, const Rational& y);

enum class FactorizationMethod { dp, greedy };

// A graphical factorization of a reduced word into W-words: concatenating
// the factors reproduces the word letter-for-letter. When produced by the
// DP, the factor count equals |w|_Y exactly.
struct WFactorization {
  std::vector<ReducedWord> factors;
  FactorizationMethod method = FactorizationMethod::dp;

  std::size_t count() const noexcept { return factors.size(); }
};

// Exact minimal W-decomposition by dynamic programming over positions:
// best[i] = min over j < i with w[j..i) a W-word of best[j] + 1. Candidate
// (j, i) pairs are restricted to uniform-sign spans, which is the oracle's
// own first rejection step applied in bulk. The identity yields an empty
// factorization (|1|_Y = 0).
WFactorization y_length_dp(const WOracle& oracle, const ReducedWord& w);

// Fast path: repeatedly take the longest W-prefix. Optimal for
// factor-closed dictionaries; cross-validated against the DP.
WFactorization y_length_greedy(const WOracle& oracle, const ReducedWord& w);

// |w|_Y via the greedy fast path, without materializing factors.
std::size_t y_length(const WOracle& oracle, const ReducedWord& w);

// d_Y(x, y) = |reduce(x^-1 y)|_Y; a left-invariant metric.
std::size_t y_dist(const WOracle& oracle, const ReducedWord& x,
                   const ReducedWord& y);

// Greedy Y-length with early exit: the exact value when it is <= limit,
// nullopt otherwise.
std::optional<std::size_t> y_length_at_most(const WOracle& oracle,
                                            const ReducedWord& w,
                                            std::size_t limit);
std::optional<std::size_t> y_dist_at_most(const WOracle& oracle,
                                          const ReducedWord& x,
                                          const ReducedWord& y,
                                          std::size_t limit);

// Y-lengths of all subwords of one fixed word. Precomputes the longest
// W-prefix at every position plus a doubling jump table, so dist(s, t) =
// |w[s..t)|_Y resolves in O(log n). Rests on greedy optimality, like
// y_length.
class SubwordYLengths {
 public:
  SubwordYLengths(const WOracle& oracle, const ReducedWord& w);

  std::size_t size() const noexcept { return n_; }
  std::size_t max_w_prefix(std::size_t p) const { return maxlen_[p]; }
  std::size_t dist(std::size_t s, std::size_t t) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> maxlen_;
  std::vector<std::vector<std::uint32_t>> up_;  // up_[j][p]: 2^j greedy jumps
};

struct PowerSample {
  long n = 0;
  std::size_t y_len = 0;
};

struct TranslationLengthEstimate {
  ReducedWord g;
  std::vector<PowerSample> samples;   // (n, |g^n|_Y) for n = 1..N
  Rational upper;                     // min_n |g^n|_Y / n  (>= ||g||_Y)
  Rational lower;                     // max_n floor(n/7)/n when g is c-free, else 0
  bool lower_bound_applies = false;   // g in F(a,b)
};

// Throws std::domain_error on the identity.
TranslationLengthEstimate power_lengths(const WOracle& oracle,
                                        const ReducedWord& g, long max_power,
                                        int workers = 0);

}  // namespace wcayley

#endif
