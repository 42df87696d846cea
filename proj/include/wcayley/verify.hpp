#ifndef WCAYLEY_VERIFY_HPP
#define WCAYLEY_VERIFY_HPP

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "wcayley/woracle.hpp"

namespace wcayley::verify {

struct Options {
  int base_length = 1;
  std::uint64_t seed = 7;
  int workers = 0;  // 0 = default
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  nlohmann::json data;
};

// Independent reference for W-membership: literal substring search over
// explicitly built powers w(n)^m for n <= n_max, |m| <= m_max. Shares no
// code with the WOracle decision procedure.
bool brute_force_is_w_word(const WordSchedule& schedule, const ReducedWord& z,
                           long n_max, long m_max);

// Runs the listed criteria (all ten when `only` is empty) in order,
// resolving dependencies (7, 8, 9 need the C-hat measured by 6). Progress
// lines go to `progress` when given.
std::vector<CriterionResult> run_criteria(const Options& opts,
                                          const std::set<int>& only = {},
                                          std::ostream* progress = nullptr);

std::string format_line(const CriterionResult& r);

}  // namespace wcayley::verify

#endif
