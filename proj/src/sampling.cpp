#include "wcayley/sampling.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace wcayley {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

ReducedWord random_reduced_word(Rng& rng, std::size_t length, bool c_free) {
  static constexpr LetterCode kFull[] = {0, 1, 2, 3, 4, 5};
  static constexpr LetterCode kCFree[] = {0, 1, 3, 4};
  const LetterCode* alphabet = c_free ? kCFree : kFull;
  const std::size_t alpha_size = c_free ? 4 : 6;

  std::vector<LetterCode> out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    if (out.empty()) {
      out.push_back(alphabet[rng.below(alpha_size)]);
      continue;
    }
    const LetterCode forbidden = inverse_code(out.back());
    std::size_t pick = rng.below(alpha_size - 1);
    for (std::size_t j = 0; j < alpha_size; ++j) {
      if (alphabet[j] == forbidden) continue;
      if (pick == 0) {
        out.push_back(alphabet[j]);
        break;
      }
      --pick;
    }
  }
  return ReducedWord::from_reduced(std::move(out));
}

int default_workers() {
  if (const char* env = std::getenv("WCAYLEY_WORKERS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

void parallel_for(std::size_t count, int workers,
                  const std::function<void(std::size_t)>& body) {
  if (count == 0) return;
  std::size_t nthreads = workers > 0 ? static_cast<std::size_t>(workers)
                                     : static_cast<std::size_t>(default_workers());
  nthreads = std::min(nthreads, count);
  if (nthreads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }

  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  threads.reserve(nthreads);
  const std::size_t chunk = (count + nthreads - 1) / nthreads;
  for (std::size_t t = 0; t < nthreads; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i) body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace wcayley
