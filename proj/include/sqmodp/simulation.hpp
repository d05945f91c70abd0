#pragma once

/**
 * @file simulation.hpp
 * @brief Seeded random streams and the blocked Monte Carlo driver shared by
 * the inversion and runs simulations.
 *
 * Reproducibility contract: the iterations of a run are cut into fixed-size
 * blocks (SimConfig::block_size). Block b always draws from stream b of the
 * seed, whichever worker executes it, and block tallies are merged by
 * integer addition. The output therefore depends on (seed, iterations,
 * block_size) only, never on the worker count.
 *
 * Stream b is std::mt19937_64 seeded with splitmix64(seed + b * 0x9E3779B97F4A7C15).
 * Bounded integers come from rejection sampling on the raw 64-bit output, so
 * no std::*_distribution (whose output is implementation-defined) is used.
 */

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "sqmodp/common.hpp"

namespace sqmodp {

inline constexpr std::string_view kRngAlgorithm = "mt19937_64+splitmix64-streams+rejection";
inline constexpr u64 kDefaultSeed = 20130401;
inline constexpr u64 kDefaultIterations = 10000;
inline constexpr u64 kDefaultBlockSize = 1000;

[[nodiscard]] constexpr u64 splitmix64(u64 x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

class Rng {
 public:
  explicit Rng(u64 seed, u64 stream = 0)
      : engine_(splitmix64(seed + stream * 0x9E3779B97F4A7C15ULL)) {}

  u64 next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  u64 uniform_below(u64 bound) {
    if (bound == 0) throw DomainError("uniform_below requires a positive bound");
    // Values below 2^64 mod bound would bias the residue; redraw them.
    const u64 threshold = (0 - bound) % bound;
    for (;;) {
      const u64 r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

  /// Fisher-Yates, last position first.
  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(uniform_below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

struct SimConfig {
  u64 seed = kDefaultSeed;
  u64 iterations = kDefaultIterations;
  /// Partition plan: iterations per independently seeded block.
  u64 block_size = kDefaultBlockSize;
  /// Threads used to execute blocks. Does not affect results.
  unsigned workers = 1;
  std::string rng_algorithm{kRngAlgorithm};

  /// @throws DomainError on zero iterations/block_size/workers or an unknown
  /// algorithm id.
  void validate() const;
};

using Histogram = std::map<u64, u64>;

struct SimReport {
  std::string statistic;
  u64 p = 0;
  Histogram histogram;
  double sample_mean = 0.0;
  double sample_sd = 0.0;  ///< n-1 denominator; 0 when iterations == 1
  SimConfig config;
};

/// Mean and n-1 standard deviation of a tally, from exact integer sums.
[[nodiscard]] std::pair<double, double> histogram_moments(const Histogram& h);

/// Mean and n-1 standard deviation of integer observations.
[[nodiscard]] std::pair<double, double> sample_moments(std::span<const u64> xs);

/// Runs `draw(rng)` config.iterations times in seeded blocks and tallies the
/// returned statistic. `draw` must be callable concurrently from distinct
/// threads with distinct Rng objects.
template <typename Draw>
Histogram run_blocked(const SimConfig& config, Draw&& draw) {
  config.validate();
  const u64 blocks = (config.iterations + config.block_size - 1) / config.block_size;
  std::vector<Histogram> tallies(blocks);

  auto run_block = [&](u64 b) {
    Rng rng(config.seed, b);
    const u64 begin = b * config.block_size;
    const u64 count = std::min(config.block_size, config.iterations - begin);
    Histogram& h = tallies[b];
    for (u64 i = 0; i < count; ++i) ++h[draw(rng)];
  };

  const u64 workers = std::min<u64>(config.workers, blocks);
  if (workers <= 1) {
    for (u64 b = 0; b < blocks; ++b) run_block(b);
  } else {
    std::atomic<u64> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (u64 w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (u64 b = next++; b < blocks; b = next++) run_block(b);
      });
    }
  }

  Histogram merged;
  for (const auto& h : tallies) {
    for (const auto& [value, count] : h) merged[value] += count;
  }
  return merged;
}

/// Builds a SimReport from a merged tally.
[[nodiscard]] SimReport make_report(std::string statistic, u64 p, Histogram histogram,
                                    const SimConfig& config);

}  // namespace sqmodp
