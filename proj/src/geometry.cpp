#include "wcayley/geometry.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <limits>

namespace wcayley {

namespace {

bool is_c_free(const ReducedWord& w) {
  return std::none_of(w.codes().begin(), w.codes().end(),
                      [](LetterCode c) { return base_of(c) == 2; });
}

// Factor end positions of the DP factorization of w, including 0.
std::vector<std::size_t> dp_factor_ends(const WOracle& oracle,
                                        const ReducedWord& w) {
  std::vector<std::size_t> ends{0};
  std::size_t pos = 0;
  for (const auto& factor : y_length_dp(oracle, w).factors) {
    pos += factor.size();
    ends.push_back(pos);
  }
  return ends;
}

}  // namespace

VertexPath x_geodesic(const ReducedWord& x, const ReducedWord& y) {
  const ReducedWord w = multiply(invert(x), y);
  VertexPath path;
  path.vertices.reserve(w.size() + 1);
  ReducedWord current = x;
  path.vertices.push_back(current);
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::vector<LetterCode> one{w.code(i)};
    current = multiply(current, ReducedWord::from_reduced(std::move(one)));
    path.vertices.push_back(current);
  }
  return path;
}

VertexPath y_geodesic(const WOracle& oracle, const ReducedWord& x,
                      const ReducedWord& y) {
  const ReducedWord w = multiply(invert(x), y);
  VertexPath path;
  ReducedWord current = x;
  path.vertices.push_back(current);
  for (const auto& factor : y_length_dp(oracle, w).factors) {
    current = multiply(current, factor);
    path.vertices.push_back(current);
  }
  return path;
}

std::size_t hausdorff_y(const WOracle& oracle, const VertexPath& p,
                        const VertexPath& q) {
  if (p.vertices.empty() || q.vertices.empty())
    throw std::invalid_argument("hausdorff_y requires nonempty paths");
  std::size_t worst = 0;
  const auto one_side = [&](const VertexPath& from, const VertexPath& to) {
    for (const auto& a : from.vertices) {
      std::size_t best = std::numeric_limits<std::size_t>::max();
      for (const auto& b : to.vertices) {
        best = std::min(best, y_dist(oracle, a, b));
        if (best == 0) break;
      }
      worst = std::max(worst, best);
    }
  };
  one_side(p, q);
  one_side(q, p);
  return worst;
}

std::size_t gluing_defect(const WOracle& oracle, const ReducedWord& x,
                          const ReducedWord& xp, const ReducedWord& y) {
  const ReducedWord w = multiply(invert(x), y);
  const ReducedWord u = multiply(invert(x), xp);
  // xp lies on [x,y]_X iff x^-1 xp is a prefix of x^-1 y.
  if (u.size() > w.size() ||
      !std::equal(u.codes().begin(), u.codes().end(), w.codes().begin()))
    throw std::invalid_argument("gluing_defect: point not on the X-geodesic");

  const std::size_t a = y_length(oracle, u);
  const std::size_t b = y_length(oracle, w.subword(u.size(), w.size()));
  const std::size_t c = y_length(oracle, w);
  return a + b >= c ? a + b - c : c - (a + b);
}

std::size_t quasiconvexity_probe(const WOracle& oracle, const ReducedWord& g) {
  if (!is_c_free(g))
    throw std::invalid_argument("quasiconvexity_probe requires a c-free word");
  if (g.empty()) return 0;

  const SubwordYLengths table(oracle, g);
  const auto ends = dp_factor_ends(oracle, g);
  const std::size_t n = g.size();

  std::size_t worst = 0;
  for (std::size_t e : ends) {
    // min over the X-geodesic vertices, i.e. the positions 0..n
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i <= n && best > 0; ++i) {
      best = std::min(best, i <= e ? table.dist(i, e) : table.dist(e, i));
    }
    worst = std::max(worst, best);
  }
  return worst;
}

double four_point_defect(const WOracle& oracle, const WordQuadruple& q) {
  const auto d = [&](int i, int j) {
    return static_cast<double>(y_dist(oracle, q.points[i], q.points[j]));
  };
  std::array<double, 3> sums = {d(0, 1) + d(2, 3), d(0, 2) + d(1, 3),
                                d(0, 3) + d(1, 2)};
  std::sort(sums.begin(), sums.end());
  return (sums[2] - sums[1]) / 2.0;
}

std::size_t hausdorff_x_vs_y_geodesic(const WOracle& oracle,
                                      const ReducedWord& w) {
  const std::size_t n = w.size();
  if (n == 0) return 0;
  const SubwordYLengths table(oracle, w);
  const auto ends = dp_factor_ends(oracle, w);

  // Every Y-geodesic vertex is a prefix of w and hence an X-geodesic vertex,
  // so that direction contributes 0; measure X-vertices against the ends.
  std::size_t worst = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    // nearest factor ends around i first; any other vertex is >= 1 away
    const auto it = std::lower_bound(ends.begin(), ends.end(), i);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    if (it != ends.end()) best = std::min(best, table.dist(i, *it));
    if (it != ends.begin()) best = std::min(best, table.dist(*(it - 1), i));
    if (best > 1) {
      for (std::size_t e : ends) {
        best = std::min(best, e >= i ? table.dist(i, e) : table.dist(e, i));
        if (best <= 1) break;
      }
    }
    worst = std::max(worst, best);
  }
  return worst;
}

GeometryReport hausdorff_experiment(const WOracle& oracle, std::size_t samples,
                                    std::size_t min_len, std::size_t max_len,
                                    std::uint64_t seed, int workers) {
  assert(min_len >= 1 && min_len <= max_len);
  GeometryReport report;
  report.sample_count = samples;
  report.seed = seed;
  report.rows.assign(samples, {0, 0});
  std::vector<std::string> words(samples);

  parallel_for(samples, workers, [&](std::size_t i) {
    Rng rng(mix_seed(seed, i));
    const std::size_t len = min_len + rng.below(max_len - min_len + 1);
    const ReducedWord w = random_reduced_word(rng, len, /*c_free=*/false);
    const std::size_t h = hausdorff_x_vs_y_geodesic(oracle, w);
    report.rows[i] = {static_cast<long>(len), static_cast<long>(h)};
    words[i] = w.str();
  });

  const long mid = static_cast<long>((min_len + max_len) / 2);
  std::size_t argmax = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const auto [len, h] = report.rows[i];
    if (h > report.c_estimate) {
      report.c_estimate = h;
      argmax = i;
    }
    if (len <= mid) {
      report.band_low_max = std::max(report.band_low_max, h);
    } else {
      report.band_high_max = std::max(report.band_high_max, h);
    }
  }
  if (samples > 0) report.max_defect_witness = {words[argmax]};
  return report;
}

GeometryReport delta_experiment(const WOracle& oracle, std::size_t samples,
                                std::size_t max_len, std::uint64_t seed,
                                int workers) {
  GeometryReport report;
  report.sample_count = samples;
  report.seed = seed;
  std::vector<double> defects(samples, 0.0);
  std::vector<std::array<std::string, 4>> quads(samples);

  parallel_for(samples, workers, [&](std::size_t i) {
    Rng rng(mix_seed(seed, i));
    WordQuadruple q;
    for (auto& p : q.points) {
      p = random_reduced_word(rng, 1 + rng.below(max_len), /*c_free=*/false);
    }
    defects[i] = four_point_defect(oracle, q);
    for (int k = 0; k < 4; ++k) quads[i][k] = q.points[k].str();
  });

  std::size_t argmax = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    if (defects[i] > report.delta_estimate) {
      report.delta_estimate = defects[i];
      argmax = i;
    }
    report.rows.push_back({static_cast<long>(i),
                           static_cast<long>(2.0 * defects[i])});
  }
  if (samples > 0)
    report.max_defect_witness.assign(quads[argmax].begin(),
                                     quads[argmax].end());
  return report;
}

GeometryReport qc_experiment(const WOracle& oracle, std::size_t samples,
                             std::size_t max_len, std::uint64_t seed,
                             int workers) {
  GeometryReport report;
  report.sample_count = samples;
  report.seed = seed;
  report.rows.assign(samples, {0, 0});
  std::vector<std::string> words(samples);

  parallel_for(samples, workers, [&](std::size_t i) {
    Rng rng(mix_seed(seed, i));
    const std::size_t len = 1 + rng.below(max_len);
    const ReducedWord g = random_reduced_word(rng, len, /*c_free=*/true);
    report.rows[i] = {static_cast<long>(len),
                      static_cast<long>(quasiconvexity_probe(oracle, g))};
    words[i] = g.str();
  });

  std::size_t argmax = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    if (report.rows[i][1] > report.c_estimate) {
      report.c_estimate = report.rows[i][1];
      argmax = i;
    }
  }
  if (samples > 0) report.max_defect_witness = {words[argmax]};
  return report;
}

GeometryReport gluing_experiment(const WOracle& oracle, std::size_t samples,
                                 std::size_t min_len, std::size_t max_len,
                                 std::uint64_t seed, int workers) {
  assert(min_len >= 1 && min_len <= max_len);
  GeometryReport report;
  report.sample_count = samples;
  report.seed = seed;
  report.rows.assign(samples, {0, 0});
  std::vector<std::string> witnesses(samples);

  parallel_for(samples, workers, [&](std::size_t i) {
    Rng rng(mix_seed(seed, i));
    const std::size_t len = min_len + rng.below(max_len - min_len + 1);
    const ReducedWord w = random_reduced_word(rng, len, /*c_free=*/false);
    const std::size_t cut = rng.below(len + 1);
    const SubwordYLengths table(oracle, w);
    const std::size_t a = table.dist(0, cut);
    const std::size_t b = table.dist(cut, len);
    const std::size_t c = table.dist(0, len);
    const std::size_t defect = a + b >= c ? a + b - c : c - (a + b);
    report.rows[i] = {static_cast<long>(cut), static_cast<long>(defect)};
    witnesses[i] = w.str();
  });

  long worst = 0;
  std::size_t argmax = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    if (report.rows[i][1] > worst) {
      worst = report.rows[i][1];
      argmax = i;
    }
  }
  report.c_estimate = worst;  // max observed defect
  if (samples > 0) report.max_defect_witness = {witnesses[argmax]};
  return report;
}

}  // namespace wcayley
