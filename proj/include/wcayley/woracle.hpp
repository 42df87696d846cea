#ifndef WCAYLEY_WORACLE_HPP
#define WCAYLEY_WORACLE_HPP

#include <array>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "wcayley/aperiodic.hpp"
#include "wcayley/words.hpp"

namespace wcayley {

struct WOracleConfig {
  WordSchedule schedule;
  // is_tm_factor searches the Thue-Morse prefix of length
  // factor * |s| + pad; a safe over-approximation of the recurrence gap,
  // validated (not trusted) by the exhaustive window tests.
  int recurrence_window_factor = 16;
  int recurrence_window_pad = 64;
};

// z is a subword of w(n)^m.
struct WWitness {
  long n = 0;
  long m = 0;
};

// Membership oracle for the W-word set: the nontrivial freely reduced words
// that occur as subwords of some power w(n)^m, m != 0. Equivalently, the
// generating set of the coned-off Cayley graph Y (closed under inversion).
//
// Decision procedure for positive z (negative words reduce to their
// inverses; mixed-sign words are never subwords of w(n)^m):
//   split z at the occurrences of c into blocks s0 c s1 c ... c sk.
//   k = 0:  z is a W-word iff it is a factor of the Thue-Morse word
//           (the schedule realizes every length >= base_length).
//   k = 1:  s1 must be a Thue-Morse prefix and s0 must occur in the
//           Thue-Morse word ending at some position l >= max(L0, |s1|);
//           that l is |v(n)| for the witness n.
//   k >= 2: every interior block must equal one single v(n) graphically
//           (distinct lengths determine n), s0 a suffix and sk a prefix
//           of that v(n).
//
// Membership results are memoized; the cache is safe for concurrent use.
class WOracle {
 public:
  WOracle();
  explicit WOracle(WOracleConfig cfg);

  const WOracleConfig& config() const noexcept { return cfg_; }
  const WordSchedule& schedule() const noexcept { return cfg_.schedule; }

  // s must be a positive word over {a,b}; true iff s is a factor of the
  // infinite Thue-Morse word.
  bool is_tm_factor(std::span<const LetterCode> s) const;

  // Throws std::domain_error on the identity (W-words are nontrivial).
  bool is_w_word(const ReducedWord& z) const;

  // Span form used by the distance engines; z must be nonempty and reduced.
  bool is_w_word_span(std::span<const LetterCode> z) const;

  // A containing power for a W-word; nullopt when z is not a W-word.
  std::optional<WWitness> witness(const ReducedWord& z) const;

  // Largest l >= 1 with w[from, from+l) a W-word. Binary search; the
  // predicate is monotone because the W-word set is factor-closed.
  std::size_t longest_w_prefix(const ReducedWord& w, std::size_t from) const;
  std::size_t longest_w_prefix_span(std::span<const LetterCode> w,
                                    std::size_t from) const;

 private:
  bool decide_positive(std::span<const LetterCode> z) const;
  bool is_tm_prefix(std::span<const LetterCode> s) const;
  // Smallest end position >= lower_bound of an occurrence of s in the
  // Thue-Morse word, searched within the configured window.
  std::optional<std::size_t> tm_occurrence_ending_at_least(
      std::span<const LetterCode> s, std::size_t lower_bound) const;

  struct MemoShard {
    mutable std::shared_mutex mutex;
    std::unordered_map<std::string, bool> entries;
  };
  static constexpr std::size_t kShardCount = 16;
  static constexpr std::size_t kMemoMaxLen = 4096;
  static constexpr std::size_t kMemoMaxEntriesPerShard = 1u << 21;

  WOracleConfig cfg_;
  std::unique_ptr<std::array<MemoShard, kShardCount>> memo_;
};

}  // namespace wcayley

#endif
