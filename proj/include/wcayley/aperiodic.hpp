#ifndef WCAYLEY_APERIODIC_HPP
#define WCAYLEY_APERIODIC_HPP

#include <optional>

#include "wcayley/words.hpp"

namespace wcayley {

// Letter i of the infinite Thue-Morse word over {a,b}: `a` when popcount(i)
// is even, `b` otherwise.
LetterCode tm_letter(std::size_t i) noexcept;

ReducedWord tm_prefix(std::size_t len);

// True iff w contains no graphical subword u^7 for nontrivial u. Scans every
// period p up to |w|/7 for a run of 6p consecutive positions with w[i]=w[i+p].
bool is_7_aperiodic(const ReducedWord& w);

// The coning-word schedule: v(n) is the Thue-Morse prefix of length
// base_length + n - 1 and w(n) = v(n) c. Lengths are pairwise distinct and
// cover every value >= base_length, so a v(n) is determined by its length;
// consecutive v(n) are nested prefixes of one another.
struct WordSchedule {
  int base_length = 1;

  std::size_t length_of(long n) const;  // |v(n)|
  std::optional<long> index_for_length(std::size_t len) const;
  ReducedWord v(long n) const;  // throws std::domain_error when n < 1
  ReducedWord w(long n) const;  // v(n) . c
};

}  // namespace wcayley

#endif
