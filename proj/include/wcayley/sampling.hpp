#ifndef WCAYLEY_SAMPLING_HPP
#define WCAYLEY_SAMPLING_HPP

#include <cstdint>
#include <functional>
#include <random>

#include "wcayley/words.hpp"

namespace wcayley {

// splitmix64 of (seed, index): per-sample sub-seeds, so results do not
// depend on how samples are partitioned across workers.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  // Uniform in [0, bound); plain modulo keeps the stream identical across
  // platforms (bias is negligible at our bounds).
  std::size_t below(std::size_t bound) { return next() % bound; }

 private:
  std::mt19937_64 eng_;
};

// Uniform freely reduced word of exactly the requested length; c_free
// restricts to the subgroup F(a,b).
ReducedWord random_reduced_word(Rng& rng, std::size_t length, bool c_free);

// WCAYLEY_WORKERS env var, else hardware concurrency.
int default_workers();

// Static block partition over [0, count); body must be safe to run
// concurrently for distinct indices. workers <= 0 means default_workers().
void parallel_for(std::size_t count, int workers,
                  const std::function<void(std::size_t)>& body);

}  // namespace wcayley

#endif
