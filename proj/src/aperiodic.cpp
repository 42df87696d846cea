#include "wcayley/aperiodic.hpp"

#include <bit>

namespace wcayley {

LetterCode tm_letter(std::size_t i) noexcept {
  return static_cast<LetterCode>(std::popcount(i) & 1);
}

ReducedWord tm_prefix(std::size_t len) {
  std::vector<LetterCode> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = tm_letter(i);
  return ReducedWord::from_reduced(std::move(out));
}

bool is_7_aperiodic(const ReducedWord& w) {
  const auto s = w.codes();
  const std::size_t n = s.size();
  for (std::size_t p = 1; 7 * p <= n; ++p) {
    // u^7 of period p shows up as 6p consecutive positions with s[i]==s[i+p].
    std::size_t run = 0;
    for (std::size_t i = 0; i + p < n; ++i) {
      run = (s[i] == s[i + p]) ? run + 1 : 0;
      if (run >= 6 * p) return false;
    }
  }
  return true;
}

std::size_t WordSchedule::length_of(long n) const {
  return static_cast<std::size_t>(base_length + n - 1);
}

std::optional<long> WordSchedule::index_for_length(std::size_t len) const {
  if (len < static_cast<std::size_t>(base_length)) return std::nullopt;
  return static_cast<long>(len) - base_length + 1;
}

ReducedWord WordSchedule::v(long n) const {
  if (n < 1) throw std::domain_error("schedule index must be >= 1");
  return tm_prefix(length_of(n));
}

ReducedWord WordSchedule::w(long n) const {
  if (n < 1) throw std::domain_error("schedule index must be >= 1");
  std::vector<LetterCode> out;
  const std::size_t len = length_of(n);
  out.reserve(len + 1);
  for (std::size_t i = 0; i < len; ++i) out.push_back(tm_letter(i));
  out.push_back(2);  // c
  return ReducedWord::from_reduced(std::move(out));
}

}  // namespace wcayley
