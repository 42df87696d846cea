#include "wcayley/acylindricity.hpp"

#include <algorithm>
#include <cassert>

#include "wcayley/sampling.hpp"

namespace wcayley {

AcylParams AcylParams::make(long radius, long c_hat) {
  if (radius < 1 || c_hat < 1)
    throw std::invalid_argument("acylindricity parameters require R, C >= 1");
  AcylParams p;
  p.radius = radius;
  p.c_hat = c_hat;
  p.separation = 100 * (radius + 4 * c_hat) * (radius + 6 * c_hat + 10);
  p.max_members = 14 * (radius + 4 * c_hat + 1) + 1;
  p.exponent_cap = 7 * (radius + 4 * c_hat + 1);
  return p;
}

std::size_t displacement(const WOracle& oracle, const ReducedWord& g,
                         const ReducedWord& p) {
  return y_dist(oracle, p, multiply(g, p));
}

namespace {

// All c-free reduced words with 1 <= |g|_A <= cap, in (length, codes) order.
// Truncated at `budget` candidates; the flag reports completeness.
std::vector<ReducedWord> enumerate_c_free(long cap, std::size_t budget,
                                          bool& complete) {
  static constexpr LetterCode kCFree[] = {0, 1, 3, 4};
  std::vector<ReducedWord> out;
  complete = true;

  std::vector<std::vector<LetterCode>> frontier{{}};
  for (long len = 1; len <= cap; ++len) {
    std::vector<std::vector<LetterCode>> next;
    next.reserve(frontier.size() * 3);
    for (const auto& word : frontier) {
      for (LetterCode c : kCFree) {
        if (!word.empty() && word.back() == inverse_code(c)) continue;
        auto extended = word;
        extended.push_back(c);
        if (out.size() >= budget) {
          complete = false;
          return out;
        }
        out.push_back(ReducedWord::from_reduced(
            std::vector<LetterCode>(extended)));
        next.push_back(std::move(extended));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

CensusReport census(const WOracle& oracle, const ReducedWord& x,
                    const ReducedWord& y, const AcylParams& params,
                    const CensusOptions& opts) {
  CensusReport report;
  report.x = x;
  report.y = y;
  report.params = params;
  report.cap = opts.cap;
  report.y_dist_xy = y_dist(oracle, x, y);
  report.separation_ok =
      report.y_dist_xy >= static_cast<std::size_t>(params.separation);

  const auto candidates =
      enumerate_c_free(opts.cap, opts.enumeration_budget, report.complete);
  const std::size_t limit = static_cast<std::size_t>(params.radius);

  std::vector<std::optional<CensusMember>> hits(candidates.size());
  parallel_for(candidates.size(), opts.workers, [&](std::size_t i) {
    const ReducedWord& g = candidates[i];
    const auto d1 =
        y_length_at_most(oracle, multiply(multiply(invert(x), g), x), limit);
    if (!d1) return;
    const auto d2 =
        y_length_at_most(oracle, multiply(multiply(invert(y), g), y), limit);
    if (!d2) return;
    hits[i] = CensusMember{g, *d1, *d2};
  });

  for (auto& h : hits) {
    if (h) report.members.push_back(std::move(*h));
  }
  return report;
}

std::optional<RootStructure> root_structure(const CensusReport& report) {
  if (!report.complete)
    throw std::invalid_argument("root_structure requires a complete census");
  if (report.members.size() < 2) return std::nullopt;

  RootStructure rs;
  rs.exponents.reserve(report.members.size());
  const PrimitiveRoot first = primitive_root(report.members.front().g);
  rs.root = first.root;
  const ReducedWord root_inverse = invert(first.root);

  for (const auto& member : report.members) {
    const PrimitiveRoot pr = primitive_root(member.g);
    long exponent = 0;
    if (pr.root == rs.root) {
      exponent = pr.exponent;
    } else if (pr.root == root_inverse) {
      exponent = -pr.exponent;
    } else {
      throw CensusViolation("census members have distinct primitive roots: " +
                                rs.root.str() + " vs " + pr.root.str(),
                            report.members.front().g, member.g);
    }
    if (std::abs(exponent) > report.params.exponent_cap) {
      throw CensusViolation(
          "census member exponent " + std::to_string(exponent) +
              " exceeds the cap " + std::to_string(report.params.exponent_cap),
          rs.root, member.g);
    }
    rs.exponents.push_back(exponent);
  }
  return rs;
}

}  // namespace wcayley
