#ifndef WCAYLEY_WORDS_HPP
#define WCAYLEY_WORDS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wcayley {

// Letters of F(a,b,c) and their inverses packed into one byte:
// 0=a 1=b 2=c 3=a^-1 4=b^-1 5=c^-1.
// Text form: lowercase = generator, uppercase = inverse.
using LetterCode = std::int8_t;

inline constexpr int kNumBases = 3;

constexpr LetterCode inverse_code(LetterCode c) noexcept {
  return c < kNumBases ? LetterCode(c + kNumBases) : LetterCode(c - kNumBases);
}
constexpr int base_of(LetterCode c) noexcept { return c % kNumBases; }
constexpr bool is_positive(LetterCode c) noexcept { return c < kNumBases; }

struct Letter {
  LetterCode code = 0;

  int base() const noexcept { return base_of(code); }  // 0=a, 1=b, 2=c
  int sign() const noexcept { return is_positive(code) ? +1 : -1; }
  Letter inverse() const noexcept { return Letter{inverse_code(code)}; }
  char to_char() const noexcept;
  static std::optional<Letter> from_char(char ch) noexcept;

  friend bool operator==(const Letter&, const Letter&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A freely reduced word over {a,b,c}^{+-1}: the canonical representative of
// an element of F(a,b,c). |word| equals the freely reduced length |g|_A.
// Immutable after construction; safe to share across threads.
class ReducedWord {
 public:
  ReducedWord() = default;

  // Parses the text form and freely reduces it. Any character outside
  // a,b,c,A,B,C raises ParseError with the offending position.
  static ReducedWord parse(std::string_view text);

  // Free reduction of an arbitrary letter sequence.
  static ReducedWord reduce(std::span<const LetterCode> letters);

  // Adopts a sequence that is already freely reduced (asserted in debug).
  static ReducedWord from_reduced(std::vector<LetterCode> letters);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  LetterCode code(std::size_t i) const noexcept { return letters_[i]; }
  Letter at(std::size_t i) const noexcept { return Letter{letters_[i]}; }
  std::span<const LetterCode> codes() const noexcept { return letters_; }

  // The graphical subword [begin, end); always freely reduced.
  ReducedWord subword(std::size_t begin, std::size_t end) const;

  std::string str() const;

  bool operator==(const ReducedWord&) const = default;
  bool operator<(const ReducedWord& other) const;  // (length, codes) order

 private:
  std::vector<LetterCode> letters_;
};

struct ReducedWordHash {
  std::size_t operator()(const ReducedWord& w) const noexcept;
};

ReducedWord multiply(const ReducedWord& x, const ReducedWord& y);
ReducedWord invert(const ReducedWord& x);
ReducedWord power(const ReducedWord& x, long n);

// word = conjugator . core . conjugator^-1 graphically, with the core
// cyclically reduced; |core| is the cyclically reduced length ||g||_A.
struct CyclicWord {
  ReducedWord core;
  ReducedWord conjugator;
};

CyclicWord cyclic_reduce(const ReducedWord& x);

struct PrimitiveRoot {
  ReducedWord root;   // root-free
  long exponent = 1;  // x = root^exponent
};

// Unique root-free root; throws std::domain_error on the identity.
PrimitiveRoot primitive_root(const ReducedWord& x);

struct CommonRoot {
  ReducedWord root;
  long exp1 = 1;  // u1 = root^exp1
  long exp2 = 1;  // u2 = root^exp2
};

// u1, u2 nontrivial and cyclically reduced. Nonempty exactly when the
// primitive roots coincide graphically.
std::optional<CommonRoot> common_root(const ReducedWord& u1,
                                      const ReducedWord& u2);

// Smallest period of s dividing |s| (border-array method).
std::size_t smallest_period_dividing(std::span<const LetterCode> s);

}  // namespace wcayley

#endif
