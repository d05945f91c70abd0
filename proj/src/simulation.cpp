#include "sqmodp/simulation.hpp"

#include <cmath>

namespace sqmodp {

namespace {

__extension__ typedef unsigned __int128 u128;

std::pair<double, double> moments_from_sums(u128 n, u128 sum, u128 sum_sq) {
  if (n == 0) throw DomainError("moments of an empty sample");
  const long double mean = static_cast<long double>(sum) / static_cast<long double>(n);
  if (n == 1) return {static_cast<double>(mean), 0.0};
  // n * sum_sq - sum^2 is exact and non-negative by Cauchy-Schwarz.
  const u128 spread = n * sum_sq - sum * sum;
  const long double var = static_cast<long double>(spread) /
                          (static_cast<long double>(n) * static_cast<long double>(n - 1));
  return {static_cast<double>(mean), static_cast<double>(std::sqrt(var))};
}

}  // namespace

void SimConfig::validate() const {
  if (iterations == 0) throw DomainError("iterations must be at least 1");
  if (block_size == 0) throw DomainError("block size must be at least 1");
  if (workers == 0) throw DomainError("workers must be at least 1");
  if (rng_algorithm != kRngAlgorithm) {
    throw DomainError("unsupported rng algorithm '" + rng_algorithm + "'");
  }
}

std::pair<double, double> histogram_moments(const Histogram& h) {
  u128 n = 0, sum = 0, sum_sq = 0;
  for (const auto& [value, count] : h) {
    n += count;
    sum += static_cast<u128>(value) * count;
    sum_sq += static_cast<u128>(value) * value * count;
  }
  return moments_from_sums(n, sum, sum_sq);
}

std::pair<double, double> sample_moments(std::span<const u64> xs) {
  u128 sum = 0, sum_sq = 0;
  for (u64 x : xs) {
    sum += x;
    sum_sq += static_cast<u128>(x) * x;
  }
  return moments_from_sums(xs.size(), sum, sum_sq);
}

SimReport make_report(std::string statistic, u64 p, Histogram histogram, const SimConfig& config) {
  u64 total = 0;
  for (const auto& [value, count] : histogram) total += count;
  if (total != config.iterations) {
    throw InvariantError("histogram holds " + std::to_string(total) + " draws, expected " +
                         std::to_string(config.iterations));
  }
  const auto [mean, sd] = histogram_moments(histogram);
  return SimReport{std::move(statistic), p, std::move(histogram), mean, sd, config};
}

}  // namespace sqmodp
