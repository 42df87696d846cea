#include "wcayley/words.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace wcayley {

namespace {

constexpr char kLetterChars[] = "abcABC";

[[maybe_unused]] bool is_reduced(std::span<const LetterCode> letters) {
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (letters[i] == inverse_code(letters[i - 1])) return false;
  }
  return true;
}

}  // namespace

char Letter::to_char() const noexcept { return kLetterChars[code]; }

std::optional<Letter> Letter::from_char(char ch) noexcept {
  switch (ch) {
    case 'a': return Letter{0};
    case 'b': return Letter{1};
    case 'c': return Letter{2};
    case 'A': return Letter{3};
    case 'B': return Letter{4};
    case 'C': return Letter{5};
    default: return std::nullopt;
  }
}

ReducedWord ReducedWord::parse(std::string_view text) {
  std::vector<LetterCode> out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto letter = Letter::from_char(text[i]);
    if (!letter) {
      throw ParseError("invalid character '" + std::string(1, text[i]) +
                           "' at position " + std::to_string(i),
                       i);
    }
    if (!out.empty() && out.back() == inverse_code(letter->code)) {
      out.pop_back();
    } else {
      out.push_back(letter->code);
    }
  }
  ReducedWord w;
  w.letters_ = std::move(out);
  return w;
}

ReducedWord ReducedWord::reduce(std::span<const LetterCode> letters) {
  std::vector<LetterCode> out;
  out.reserve(letters.size());
  for (LetterCode c : letters) {
    if (!out.empty() && out.back() == inverse_code(c)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  ReducedWord w;
  w.letters_ = std::move(out);
  return w;
}

ReducedWord ReducedWord::from_reduced(std::vector<LetterCode> letters) {
  assert(is_reduced(letters));
  ReducedWord w;
  w.letters_ = std::move(letters);
  return w;
}

ReducedWord ReducedWord::subword(std::size_t begin, std::size_t end) const {
  assert(begin <= end && end <= letters_.size());
  ReducedWord w;
  w.letters_.assign(letters_.begin() + begin, letters_.begin() + end);
  return w;
}

std::string ReducedWord::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (LetterCode c : letters_) s.push_back(kLetterChars[c]);
  return s;
}

bool ReducedWord::operator<(const ReducedWord& other) const {
  if (letters_.size() != other.letters_.size())
    return letters_.size() < other.letters_.size();
  return std::lexicographical_compare(letters_.begin(), letters_.end(),
                                      other.letters_.begin(),
                                      other.letters_.end());
}

std::size_t ReducedWordHash::operator()(const ReducedWord& w) const noexcept {
  // FNV-1a over the letter bytes
  std::size_t h = 1469598103934665603ull;
  for (LetterCode c : w.codes()) {
    h ^= static_cast<std::size_t>(static_cast<unsigned char>(c));
    h *= 1099511628211ull;
  }
  return h;
}

ReducedWord multiply(const ReducedWord& x, const ReducedWord& y) {
  std::size_t i = x.size();
  std::size_t j = 0;
  while (i > 0 && j < y.size() && x.code(i - 1) == inverse_code(y.code(j))) {
    --i;
    ++j;
  }
  std::vector<LetterCode> out;
  out.reserve(i + (y.size() - j));
  out.insert(out.end(), x.codes().begin(), x.codes().begin() + i);
  out.insert(out.end(), y.codes().begin() + j, y.codes().end());
  return ReducedWord::from_reduced(std::move(out));
}

ReducedWord invert(const ReducedWord& x) {
  std::vector<LetterCode> out;
  out.reserve(x.size());
  for (std::size_t i = x.size(); i-- > 0;) out.push_back(inverse_code(x.code(i)));
  return ReducedWord::from_reduced(std::move(out));
}

ReducedWord power(const ReducedWord& x, long n) {
  if (n == 0 || x.empty()) return {};
  if (n < 0) return power(invert(x), -n);
  // x = u w u^-1 with w cyclically reduced, so x^n = u w^n u^-1 graphically.
  CyclicWord cyc = cyclic_reduce(x);
  const auto& u = cyc.conjugator;
  const auto& w = cyc.core;
  std::vector<LetterCode> out;
  out.reserve(2 * u.size() + static_cast<std::size_t>(n) * w.size());
  out.insert(out.end(), u.codes().begin(), u.codes().end());
  for (long k = 0; k < n; ++k)
    out.insert(out.end(), w.codes().begin(), w.codes().end());
  for (std::size_t i = u.size(); i-- > 0;) out.push_back(inverse_code(u.code(i)));
  return ReducedWord::from_reduced(std::move(out));
}

CyclicWord cyclic_reduce(const ReducedWord& x) {
  std::size_t lo = 0;
  std::size_t hi = x.size();
  while (hi - lo >= 2 && x.code(lo) == inverse_code(x.code(hi - 1))) {
    ++lo;
    --hi;
  }
  return CyclicWord{x.subword(lo, hi), x.subword(0, lo)};
}

std::size_t smallest_period_dividing(std::span<const LetterCode> s) {
  const std::size_t n = s.size();
  if (n == 0) return 0;
  // Border array; the smallest period is n - border(n). It is the smallest
  // period dividing n whenever it divides n, otherwise the word is primitive.
  std::vector<std::size_t> border(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t b = border[i - 1];
    while (b > 0 && s[i] != s[b]) b = border[b - 1];
    if (s[i] == s[b]) ++b;
    border[i] = b;
  }
  const std::size_t p = n - border[n - 1];
  return (n % p == 0) ? p : n;
}

PrimitiveRoot primitive_root(const ReducedWord& x) {
  if (x.empty()) throw std::domain_error("no root of identity");
  CyclicWord cyc = cyclic_reduce(x);
  const std::size_t p = smallest_period_dividing(cyc.core.codes());
  const long e = static_cast<long>(cyc.core.size() / p);
  if (e == 1) return PrimitiveRoot{x, 1};
  // Re-conjugate: x = (u r u^-1)^e with no cancellation at the seams, since
  // r starts and ends like the core does.
  std::vector<LetterCode> out;
  const auto& u = cyc.conjugator;
  out.reserve(2 * u.size() + p);
  out.insert(out.end(), u.codes().begin(), u.codes().end());
  out.insert(out.end(), cyc.core.codes().begin(), cyc.core.codes().begin() + p);
  for (std::size_t i = u.size(); i-- > 0;) out.push_back(inverse_code(u.code(i)));
  return PrimitiveRoot{ReducedWord::from_reduced(std::move(out)), e};
}

std::optional<CommonRoot> common_root(const ReducedWord& u1,
                                      const ReducedWord& u2) {
  if (u1.empty() || u2.empty())
    throw std::domain_error("common_root requires nontrivial words");
  for (const auto* u : {&u1, &u2}) {
    if (u->size() >= 2 && u->code(0) == inverse_code(u->code(u->size() - 1)))
      throw std::invalid_argument("common_root requires cyclically reduced input");
  }
  PrimitiveRoot r1 = primitive_root(u1);
  PrimitiveRoot r2 = primitive_root(u2);
  if (r1.root == r2.root) return CommonRoot{r1.root, r1.exponent, r2.exponent};
  return std::nullopt;
}

}  // namespace wcayley
