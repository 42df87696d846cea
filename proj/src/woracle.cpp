#include "wcayley/woracle.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>

namespace wcayley {

namespace {

enum class SignClass { positive, negative, mixed };

SignClass classify_signs(std::span<const LetterCode> z) {
  const bool first = is_positive(z[0]);
  for (LetterCode c : z) {
    if (is_positive(c) != first) return SignClass::mixed;
  }
  return first ? SignClass::positive : SignClass::negative;
}

std::vector<LetterCode> inverted(std::span<const LetterCode> z) {
  std::vector<LetterCode> out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i)
    out[i] = inverse_code(z[z.size() - 1 - i]);
  return out;
}

std::vector<std::size_t> kmp_failure(std::span<const LetterCode> s) {
  std::vector<std::size_t> fail(s.size(), 0);
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::size_t b = fail[i - 1];
    while (b > 0 && s[i] != s[b]) b = fail[b - 1];
    if (s[i] == s[b]) ++b;
    fail[i] = b;
  }
  return fail;
}

// KMP scan of s over the Thue-Morse letters in [begin, end), generated on
// the fly; returns the first match end position, or nullopt.
std::optional<std::size_t> kmp_find_in_tm(std::span<const LetterCode> s,
                                          std::size_t begin, std::size_t end) {
  assert(!s.empty());
  const auto fail = kmp_failure(s);
  std::size_t matched = 0;
  for (std::size_t i = begin; i < end; ++i) {
    const LetterCode c = tm_letter(i);
    while (matched > 0 && c != s[matched]) matched = fail[matched - 1];
    if (c == s[matched]) ++matched;
    if (matched == s.size()) return i + 1;
  }
  return std::nullopt;
}

}  // namespace

WOracle::WOracle() : WOracle(WOracleConfig{}) {}

WOracle::WOracle(WOracleConfig cfg)
    : cfg_(cfg), memo_(std::make_unique<std::array<MemoShard, kShardCount>>()) {
  if (cfg_.schedule.base_length < 1)
    throw std::invalid_argument("schedule base_length must be >= 1");
  if (cfg_.recurrence_window_factor < 1 || cfg_.recurrence_window_pad < 0)
    throw std::invalid_argument("invalid recurrence window parameters");
}

bool WOracle::is_tm_factor(std::span<const LetterCode> s) const {
  if (s.empty()) return true;
  const std::size_t window =
      static_cast<std::size_t>(cfg_.recurrence_window_factor) * s.size() +
      static_cast<std::size_t>(cfg_.recurrence_window_pad);
  return kmp_find_in_tm(s, 0, window).has_value();
}

bool WOracle::is_tm_prefix(std::span<const LetterCode> s) const {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != tm_letter(i)) return false;
  }
  return true;
}

std::optional<std::size_t> WOracle::tm_occurrence_ending_at_least(
    std::span<const LetterCode> s, std::size_t lower_bound) const {
  if (s.empty()) return lower_bound;
  const std::size_t lo = std::max(lower_bound, s.size());
  const std::size_t hi =
      lo + static_cast<std::size_t>(cfg_.recurrence_window_factor) * s.size() +
      static_cast<std::size_t>(cfg_.recurrence_window_pad);
  // Matches starting at lo - |s| end at lo or later.
  return kmp_find_in_tm(s, lo - s.size(), hi);
}

bool WOracle::decide_positive(std::span<const LetterCode> z) const {
  const std::size_t L0 = static_cast<std::size_t>(cfg_.schedule.base_length);

  // Block boundaries around the occurrences of c.
  std::vector<std::size_t> c_positions;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] == 2) c_positions.push_back(i);
  }

  if (c_positions.empty()) return is_tm_factor(z);

  const std::size_t k = c_positions.size();
  const auto s0 = z.subspan(0, c_positions.front());
  const auto sk = z.subspan(c_positions.back() + 1);

  if (k == 1) {
    if (!is_tm_prefix(sk)) return false;
    const std::size_t lb = std::max(L0, sk.size());
    return tm_occurrence_ending_at_least(s0, lb).has_value();
  }

  // k >= 2: interior blocks must all equal one v(n) graphically.
  const auto first = z.subspan(c_positions[0] + 1,
                               c_positions[1] - c_positions[0] - 1);
  if (first.size() < L0 || !is_tm_prefix(first)) return false;
  for (std::size_t b = 1; b + 1 < k; ++b) {
    const auto block = z.subspan(c_positions[b] + 1,
                                 c_positions[b + 1] - c_positions[b] - 1);
    if (block.size() != first.size() ||
        !std::equal(block.begin(), block.end(), first.begin()))
      return false;
  }
  const std::size_t len = first.size();  // = |v(n)| for the forced n
  if (sk.size() > len || !is_tm_prefix(sk)) return false;
  if (s0.size() > len) return false;
  for (std::size_t i = 0; i < s0.size(); ++i) {
    if (s0[i] != tm_letter(len - s0.size() + i)) return false;
  }
  return true;
}

bool WOracle::is_w_word_span(std::span<const LetterCode> z) const {
  assert(!z.empty());
  const SignClass sign = classify_signs(z);
  if (sign == SignClass::mixed) return false;

  std::vector<LetterCode> inv;
  std::span<const LetterCode> pos = z;
  if (sign == SignClass::negative) {
    inv = inverted(z);
    pos = inv;
  }

  if (pos.size() > kMemoMaxLen) return decide_positive(pos);

  const std::string key(reinterpret_cast<const char*>(pos.data()), pos.size());
  MemoShard& shard =
      (*memo_)[std::hash<std::string>{}(key) % kShardCount];
  {
    std::shared_lock lock(shard.mutex);
    auto it = shard.entries.find(key);
    if (it != shard.entries.end()) return it->second;
  }
  const bool result = decide_positive(pos);
  {
    std::unique_lock lock(shard.mutex);
    if (shard.entries.size() < kMemoMaxEntriesPerShard)
      shard.entries.emplace(key, result);
  }
  return result;
}

bool WOracle::is_w_word(const ReducedWord& z) const {
  if (z.empty()) throw std::domain_error("W-words are nontrivial");
  return is_w_word_span(z.codes());
}

std::optional<WWitness> WOracle::witness(const ReducedWord& z) const {
  if (z.empty()) throw std::domain_error("W-words are nontrivial");
  const SignClass sign = classify_signs(z.codes());
  if (sign == SignClass::mixed) return std::nullopt;
  if (sign == SignClass::negative) {
    auto pos = witness(invert(z));
    if (!pos) return std::nullopt;
    return WWitness{pos->n, -pos->m};
  }

  const auto codes = z.codes();
  const std::size_t L0 = static_cast<std::size_t>(cfg_.schedule.base_length);
  std::vector<std::size_t> c_positions;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (codes[i] == 2) c_positions.push_back(i);
  }

  if (c_positions.empty()) {
    const auto end = tm_occurrence_ending_at_least(codes, L0);
    if (!end) return std::nullopt;
    return WWitness{static_cast<long>(*end - L0 + 1), 1};
  }

  if (!is_w_word_span(codes)) return std::nullopt;

  const std::size_t k = c_positions.size();
  const auto s0 = codes.subspan(0, c_positions.front());
  const auto sk = codes.subspan(c_positions.back() + 1);
  if (k == 1) {
    const std::size_t lb = std::max(L0, sk.size());
    const auto end = tm_occurrence_ending_at_least(s0, lb);
    assert(end.has_value());
    return WWitness{static_cast<long>(*end - L0 + 1),
                    sk.empty() ? 1L : 2L};
  }
  const std::size_t len = c_positions[1] - c_positions[0] - 1;
  return WWitness{static_cast<long>(len - L0 + 1),
                  static_cast<long>(sk.empty() ? k : k + 1)};
}

std::size_t WOracle::longest_w_prefix_span(std::span<const LetterCode> w,
                                           std::size_t from) const {
  assert(from < w.size());
  // A W-word has uniform letter sign, so the candidate range ends with the
  // sign run containing `from`.
  const bool sign = is_positive(w[from]);
  std::size_t run_end = from + 1;
  while (run_end < w.size() && is_positive(w[run_end]) == sign) ++run_end;

  std::size_t lo = 1;  // single letters are always W-words
  std::size_t hi = run_end - from;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    if (is_w_word_span(w.subspan(from, mid))) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

std::size_t WOracle::longest_w_prefix(const ReducedWord& w,
                                      std::size_t from) const {
  if (from >= w.size())
    throw std::out_of_range("longest_w_prefix: position past end of word");
  return longest_w_prefix_span(w.codes(), from);
}

}  // namespace wcayley
