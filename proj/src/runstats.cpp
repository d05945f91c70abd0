#include "sqmodp/runstats.hpp"

#include <algorithm>
#include <string>

namespace sqmodp {

namespace {

void check_signs(std::span<const Sign> seq) {
  for (Sign s : seq) {
    if (s != 1 && s != -1) {
      throw DomainError("sign sequences may only hold +1 and -1, found " + std::to_string(s));
    }
  }
}

RunsScan scan_of(const std::vector<u64>& primes) {
  RunsScan scan;
  scan.rows.reserve(primes.size());
  for (u64 p : primes) {
    const auto seq = legendre_sequence(OddPrime(p));
    scan.rows.push_back({p, count_runs(seq.symbols)});
  }
  return scan;
}

}  // namespace

LegendreSeq legendre_sequence(OddPrime p) {
  LegendreSeq out{p, {}};
  out.symbols.reserve(p.value() - 1);
  for (u64 a = 1; a < p.value(); ++a) {
    out.symbols.push_back(static_cast<Sign>(to_int(legendre_euler(static_cast<i64>(a), p))));
  }
  return out;
}

u64 count_runs(std::span<const Sign> seq) {
  if (seq.empty()) throw DomainError("count_runs of an empty sequence");
  check_signs(seq);
  u64 runs = 1;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (seq[i] != seq[i - 1]) ++runs;
  }
  return runs;
}

PairCounts pair_counts(std::span<const Sign> seq) {
  if (seq.size() < 2) throw DomainError("pair_counts needs at least two entries");
  check_signs(seq);
  PairCounts c;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const bool first = seq[i - 1] > 0;
    const bool second = seq[i] > 0;
    if (first && second) ++c.npp;
    else if (first) ++c.npm;
    else if (second) ++c.nmp;
    else ++c.nmm;
  }
  return c;
}

PairCounts aladov_predicted(OddPrime p) {
  const u64 pv = p.value();
  if (pv % 4 == 1) {
    const u64 q = (pv - 1) / 4;
    return {(pv - 5) / 4, q, q, q};
  }
  const u64 q = (pv - 3) / 4;
  return {q, (pv + 1) / 4, q, q};
}

RunsMoments runs_null_moments(u64 n_plus, u64 n_minus) {
  if (n_plus == 0 || n_minus == 0) throw DomainError("runs_null_moments needs both counts >= 1");
  if (n_plus > 1'000'000 || n_minus > 1'000'000) {
    throw DomainError("runs_null_moments supports counts up to 10^6");
  }
  const auto a = static_cast<i64>(n_plus);
  const auto b = static_cast<i64>(n_minus);
  const i64 n = a + b;
  const i64 prod2 = 2 * a * b;
  const Rational mean(prod2 + n, n);
  // The variance denominator is n^2 (n-1); reduce by parts to stay in i64.
  const Rational left(prod2, n * n);
  const Rational right(prod2 - n, n - 1);
  const Rational variance(left.num * right.num, left.den * right.den);
  return {mean, variance};
}

SimReport simulate_runs(OddPrime p, const SimConfig& config) {
  if (p.value() < 5) throw DomainError("simulate_runs needs p >= 5");
  const u64 half = (p.value() - 1) / 2;
  auto hist = run_blocked(config, [half](Rng& rng) {
    std::vector<Sign> seq(2 * half, Sign{-1});
    std::fill(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(half), Sign{1});
    rng.shuffle(std::span<Sign>(seq));
    return count_runs(seq);
  });
  return make_report("runs", p.value(), std::move(hist), config);
}

std::vector<u64> odd_primes_upto(u64 p_max) {
  std::vector<u64> out;
  if (p_max < 3) return out;
  std::vector<bool> composite(p_max + 1, false);
  for (u64 i = 3; i <= p_max; i += 2) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= p_max; j += 2 * i) composite[j] = true;
  }
  return out;
}

std::vector<u64> first_odd_primes(u64 count) {
  std::vector<u64> out;
  out.reserve(count);
  for (u64 n = 3; out.size() < count; n += 2) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

RunsScan scan_runs_first(u64 count) {
  if (count == 0) throw DomainError("scan must cover at least one odd prime");
  return scan_of(first_odd_primes(count));
}

RunsScan scan_runs_upto(u64 p_max) {
  if (p_max < 3) throw DomainError("scan bound " + std::to_string(p_max) + " is below 3");
  return scan_of(odd_primes_upto(p_max));
}

}  // namespace sqmodp
