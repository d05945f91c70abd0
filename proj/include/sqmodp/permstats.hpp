#pragma once

#include <span>
#include <utility>
#include <vector>

#include "sqmodp/common.hpp"
#include "sqmodp/modarith.hpp"
#include "sqmodp/simulation.hpp"

namespace sqmodp {

/// Number of pairs i < j with seq[i] > seq[j], by merge counting in
/// O(n log n). @throws DomainError if two elements are equal.
[[nodiscard]] u64 count_inversions(std::span<const u64> seq);

struct NullMoments {
  Rational mean;
  Rational variance;
  [[nodiscard]] double sd() const;
};

/// Exact mean (p-2)(p-3)/4 and variance (p-2)(p-3)(2p+1)/72 of the inversion
/// count of a uniformly random permutation of [1, p-1] with 1 held first.
/// @throws DomainError for p = 3.
[[nodiscard]] NullMoments inversion_null_moments(OddPrime p);

struct InversionSummary {
  OddPrime p;
  std::vector<std::pair<u64, u64>> per_root;  ///< (g, inversions), ascending g
  Rational sample_mean;
  double sample_sd;  ///< n-1 denominator
  NullMoments theory;
};

/// Inversions of generator_cycle(g, p) for every primitive root g.
/// @throws DomainError for p = 3.
[[nodiscard]] InversionSummary inversion_summary(OddPrime p);

/// 1 followed by a uniform shuffle of 2..p-1.
[[nodiscard]] std::vector<u64> random_fixed_cycle(OddPrime p, Rng& rng);

/// Inversion counts of config.iterations random fixed cycles.
[[nodiscard]] SimReport simulate_inversions(OddPrime p, const SimConfig& config);

/// Fraction of config.iterations simulated batches, each of `batch_size`
/// random fixed cycles, whose sample sd is >= observed_sd.
[[nodiscard]] double sd_pvalue(OddPrime p, double observed_sd, u64 batch_size,
                               const SimConfig& config);

/// sd_pvalue with the observed sd and batch size taken from the primitive
/// roots of p (batch size euler_phi(p-1)).
[[nodiscard]] double sd_pvalue(OddPrime p, const SimConfig& config);

}  // namespace sqmodp
