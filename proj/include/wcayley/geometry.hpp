#ifndef WCAYLEY_GEOMETRY_HPP
#define WCAYLEY_GEOMETRY_HPP

#include <array>
#include <string>

#include "wcayley/sampling.hpp"
#include "wcayley/ydist.hpp"

namespace wcayley {

// A path through vertices of Y (group elements). X-geodesic paths step by
// one letter of A; Y-geodesic paths step by one W-word and realize
// y_dist(endpoints).
struct VertexPath {
  std::vector<ReducedWord> vertices;
};

// Vertices x . (prefixes of reduce(x^-1 y)); the unique X-geodesic.
VertexPath x_geodesic(const ReducedWord& x, const ReducedWord& y);

// Vertices x . (prefix products of the DP factorization of reduce(x^-1 y)).
VertexPath y_geodesic(const WOracle& oracle, const ReducedWord& x,
                      const ReducedWord& y);

// Symmetrized max-min of y_dist over the two vertex sets.
std::size_t hausdorff_y(const WOracle& oracle, const VertexPath& p,
                        const VertexPath& q);

// |d_Y(x,x') + d_Y(x',y) - d_Y(x,y)|. xp must lie on the X-geodesic [x,y];
// throws std::invalid_argument otherwise.
std::size_t gluing_defect(const WOracle& oracle, const ReducedWord& x,
                          const ReducedWord& xp, const ReducedWord& y);

// Distance from the Y-geodesic [1,g] to the F(a,b)-orbit, measured against
// the X-geodesic vertices (all of which lie in F(a,b) for c-free g).
// Throws std::invalid_argument when g is not c-free.
std::size_t quasiconvexity_probe(const WOracle& oracle, const ReducedWord& g);

struct WordQuadruple {
  std::array<ReducedWord, 4> points;
};

// Four-point hyperbolicity defect: half the gap between the largest and the
// middle of the three pairwise distance-sum pairings.
double four_point_defect(const WOracle& oracle, const WordQuadruple& q);

// Shared report shape for the sampling experiments. Estimates are maxima
// over the sample, hence lower bounds for the true delta and C.
struct GeometryReport {
  double delta_estimate = 0.0;
  long c_estimate = 0;
  std::size_t sample_count = 0;
  std::vector<std::string> max_defect_witness;  // words attaining the max
  std::uint64_t seed = 0;
  // per-sample rows (sample size parameter, measured value) for CSV output
  std::vector<std::array<long, 2>> rows;
  // band maxima used by the fellow-traveling flatness check
  long band_low_max = 0;
  long band_high_max = 0;
};

// Hausdorff closeness of X- and Y-geodesics over random words with
// |w|_A in [min_len, max_len]; c_estimate is the sample maximum, the band
// maxima split at the midpoint of the length range.
GeometryReport hausdorff_experiment(const WOracle& oracle,
                                    std::size_t samples, std::size_t min_len,
                                    std::size_t max_len, std::uint64_t seed,
                                    int workers = 0);

// Four-point delta estimate over random quadruples of words with lengths
// up to max_len.
GeometryReport delta_experiment(const WOracle& oracle, std::size_t samples,
                                std::size_t max_len, std::uint64_t seed,
                                int workers = 0);

// quasiconvexity_probe over random c-free words with lengths up to max_len.
GeometryReport qc_experiment(const WOracle& oracle, std::size_t samples,
                             std::size_t max_len, std::uint64_t seed,
                             int workers = 0);

// gluing_defect over random (1, prefix, w) triples with |w| in
// [min_len, max_len].
GeometryReport gluing_experiment(const WOracle& oracle, std::size_t samples,
                                 std::size_t min_len, std::size_t max_len,
                                 std::uint64_t seed, int workers = 0);

// Hausdorff distance between x_geodesic(1, w) and y_geodesic(1, w) using the
// shared-prefix structure of both paths (all vertices are prefixes of w), so
// each pairwise distance is a subword Y-length.
std::size_t hausdorff_x_vs_y_geodesic(const WOracle& oracle,
                                      const ReducedWord& w);

}  // namespace wcayley

#endif
