#pragma once

/**
 * @file runstats.hpp
 * @brief Runs and overlapping-pair statistics of the Legendre sequence
 * (1/p), (2/p), ..., ((p-1)/p).
 *
 * For every odd prime the pair counts are fixed by p mod 4:
 *
 *   p = 1 (mod 4):  n+- = n-+ = n-- = (p-1)/4,  n++ = (p-5)/4
 *   p = 3 (mod 4):  n++ = n-- = n-+ = (p-3)/4,  n+- = (p+1)/4
 *
 * so the number of runs, n+- + n-+ + 1, is always (p+1)/2.
 */

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sqmodp/common.hpp"
#include "sqmodp/modarith.hpp"
#include "sqmodp/simulation.hpp"

namespace sqmodp {

/// Sign sequences are stored as +1 / -1 bytes.
using Sign = std::int8_t;

struct LegendreSeq {
  OddPrime p;
  std::vector<Sign> symbols;  ///< symbols[a-1] = (a/p), a = 1..p-1
};

struct PairCounts {
  u64 npp = 0;
  u64 npm = 0;
  u64 nmp = 0;
  u64 nmm = 0;

  [[nodiscard]] u64 total() const { return npp + npm + nmp + nmm; }
  friend bool operator==(const PairCounts&, const PairCounts&) = default;
};

struct RunsRow {
  u64 p;
  u64 runs;
};

/// Rows ascending by p.
struct RunsScan {
  std::vector<RunsRow> rows;
};

[[nodiscard]] LegendreSeq legendre_sequence(OddPrime p);

/// 1 + number of sign changes. @throws DomainError on empty input or an
/// entry other than +1/-1.
[[nodiscard]] u64 count_runs(std::span<const Sign> seq);

/// Counts of consecutive (+,+), (+,-), (-,+), (-,-).
/// @throws DomainError for fewer than two entries or entries other than +1/-1.
[[nodiscard]] PairCounts pair_counts(std::span<const Sign> seq);

/// Pair counts predicted from p mod 4 (see file comment).
[[nodiscard]] PairCounts aladov_predicted(OddPrime p);

struct RunsMoments {
  Rational mean;
  Rational variance;
};

/// Null mean and variance of the run count when n_plus (+1)s and n_minus
/// (-1)s are arranged uniformly at random.
[[nodiscard]] RunsMoments runs_null_moments(u64 n_plus, u64 n_minus);

/// Run counts of config.iterations uniform shuffles of (p-1)/2 (+1)s and
/// (p-1)/2 (-1)s.
[[nodiscard]] SimReport simulate_runs(OddPrime p, const SimConfig& config);

/// The first `count` odd primes with their Legendre run counts.
[[nodiscard]] RunsScan scan_runs_first(u64 count);

/// Every odd prime p <= p_max with its Legendre run count.
/// @throws DomainError if p_max < 3.
[[nodiscard]] RunsScan scan_runs_upto(u64 p_max);

/// Odd primes in ascending order: the first `count`, or all up to a bound.
[[nodiscard]] std::vector<u64> first_odd_primes(u64 count);
[[nodiscard]] std::vector<u64> odd_primes_upto(u64 p_max);

}  // namespace sqmodp
