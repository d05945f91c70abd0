#include "sqmodp/permstats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "sqmodp/genseq.hpp"
#include "sqmodp/primroots.hpp"

namespace sqmodp {

namespace {

// Sorts a[lo, hi) using buf as scratch and returns the inversions inside it.
u64 merge_count(std::vector<u64>& a, std::vector<u64>& buf, std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  u64 inv = merge_count(a, buf, lo, mid) + merge_count(a, buf, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (a[i] < a[j]) {
      buf[k++] = a[i++];
    } else if (a[j] < a[i]) {
      inv += mid - i;
      buf[k++] = a[j++];
    } else {
      throw DomainError("count_inversions requires distinct elements; " +
                        std::to_string(a[i]) + " repeats");
    }
  }
  while (i < mid) buf[k++] = a[i++];
  while (j < hi) buf[k++] = a[j++];
  std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo),
            buf.begin() + static_cast<std::ptrdiff_t>(hi),
            a.begin() + static_cast<std::ptrdiff_t>(lo));
  return inv;
}

void require_p_at_least_5(OddPrime p) {
  if (p.value() < 5) throw DomainError("inversion statistics need p >= 5 (p = 3 has a 1-element tail)");
}

i64 as_i64(u64 v) {
  if (v > static_cast<u64>(INT64_MAX)) throw DomainError("value exceeds 64-bit signed range");
  return static_cast<i64>(v);
}

}  // namespace

u64 count_inversions(std::span<const u64> seq) {
  std::vector<u64> a(seq.begin(), seq.end());
  std::vector<u64> buf(a.size());
  return merge_count(a, buf, 0, a.size());
}

double NullMoments::sd() const { return std::sqrt(variance.to_double()); }

NullMoments inversion_null_moments(OddPrime p) {
  require_p_at_least_5(p);
  // The variance numerator overflows i64 somewhere past p ~ 1.6e6.
  if (p.value() > 1'000'000) throw DomainError("inversion moments supported for p <= 10^6");
  const i64 pv = as_i64(p.value());
  const i64 base = (pv - 2) * (pv - 3);
  return {Rational(base, 4), Rational(base * (2 * pv + 1), 72)};
}

InversionSummary inversion_summary(OddPrime p) {
  require_p_at_least_5(p);
  InversionSummary s{p, {}, {}, 0.0, inversion_null_moments(p)};
  std::vector<u64> counts;
  for (u64 g : primitive_roots(p).roots) {
    const auto cycle = generator_cycle(g, p);
    const u64 inv = count_inversions(cycle.states);
    s.per_root.emplace_back(g, inv);
    counts.push_back(inv);
  }
  const u64 total = std::accumulate(counts.begin(), counts.end(), u64{0});
  s.sample_mean = Rational(as_i64(total), as_i64(counts.size()));
  s.sample_sd = sample_moments(counts).second;
  return s;
}

std::vector<u64> random_fixed_cycle(OddPrime p, Rng& rng) {
  std::vector<u64> cycle(p.value() - 1);
  std::iota(cycle.begin(), cycle.end(), u64{1});
  rng.shuffle(std::span<u64>(cycle).subspan(1));
  return cycle;
}

SimReport simulate_inversions(OddPrime p, const SimConfig& config) {
  require_p_at_least_5(p);
  auto hist = run_blocked(config, [p](Rng& rng) {
    const auto cycle = random_fixed_cycle(p, rng);
    return count_inversions(cycle);
  });
  return make_report("inversions", p.value(), std::move(hist), config);
}

double sd_pvalue(OddPrime p, double observed_sd, u64 batch_size, const SimConfig& config) {
  require_p_at_least_5(p);
  if (batch_size < 2) throw DomainError("sd_pvalue batches need at least 2 cycles");
  auto hist = run_blocked(config, [&](Rng& rng) -> u64 {
    std::vector<u64> counts(batch_size);
    for (auto& c : counts) c = count_inversions(random_fixed_cycle(p, rng));
    return sample_moments(counts).second >= observed_sd ? 1 : 0;
  });
  const auto hits = hist.contains(1) ? hist.at(1) : u64{0};
  return static_cast<double>(hits) / static_cast<double>(config.iterations);
}

double sd_pvalue(OddPrime p, const SimConfig& config) {
  const auto summary = inversion_summary(p);
  return sd_pvalue(p, summary.sample_sd, summary.per_root.size(), config);
}

}  // namespace sqmodp
