#ifndef WCAYLEY_ACYLINDRICITY_HPP
#define WCAYLEY_ACYLINDRICITY_HPP

#include <optional>

#include "wcayley/ydist.hpp"

namespace wcayley {

// Constants of the acylindricity certificate, evaluated exactly from the
// radius R and the measured C-hat:
//   L = 100 (R + 4C)(R + 6C + 10)      separation threshold
//   M = 14 (R + 4C + 1) + 1            coarse-stabilizer cardinality bound
//   exponent cap = 7 (R + 4C + 1)      bound on powers of the common root
struct AcylParams {
  long radius = 1;  // R
  long c_hat = 1;
  long separation = 0;
  long max_members = 0;
  long exponent_cap = 0;

  static AcylParams make(long radius, long c_hat);
};

// y_dist(p, g p).
std::size_t displacement(const WOracle& oracle, const ReducedWord& g,
                         const ReducedWord& p);

struct CensusMember {
  ReducedWord g;
  std::size_t disp_x = 0;
  std::size_t disp_y = 0;
};

// The set S1 of nontrivial c-free g with d_Y(x, gx) <= R and
// d_Y(y, gy) <= R, enumerated over 1 <= |g|_A <= cap. The identity always
// qualifies and is reported separately from `members`.
struct CensusReport {
  ReducedWord x, y;
  AcylParams params;
  long cap = 0;
  std::size_t y_dist_xy = 0;
  bool separation_ok = false;  // y_dist_xy >= params.separation
  bool complete = true;        // false when the enumeration budget ran out
  std::vector<CensusMember> members;  // nontrivial members, sorted
};

struct CensusOptions {
  long cap = 10;
  std::size_t enumeration_budget = 50'000'000;
  int workers = 0;
};

CensusReport census(const WOracle& oracle, const ReducedWord& x,
                    const ReducedWord& y, const AcylParams& params,
                    const CensusOptions& opts = {});

struct RootStructure {
  ReducedWord root;             // common primitive root g0, fixed up to inversion
  std::vector<long> exponents;  // member i = root^exponents[i]
};

// A counterexample to the census certificate: either two members with
// distinct primitive roots, or a member whose exponent exceeds the cap.
class CensusViolation : public std::runtime_error {
 public:
  CensusViolation(const std::string& msg, ReducedWord first, ReducedWord second)
      : std::runtime_error(msg), first_(std::move(first)),
        second_(std::move(second)) {}
  const ReducedWord& first() const noexcept { return first_; }
  const ReducedWord& second() const noexcept { return second_; }

 private:
  ReducedWord first_, second_;
};

// Common primitive-root structure of the nontrivial members; nullopt when
// there are fewer than two. Throws CensusViolation on a root mismatch or an
// exponent above params.exponent_cap, std::invalid_argument when the report
// is incomplete.
std::optional<RootStructure> root_structure(const CensusReport& report);

}  // namespace wcayley

#endif
