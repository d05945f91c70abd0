#include "sqmodp/primroots.hpp"

#include <string>

namespace sqmodp {

Factorization factorize(u64 n) {
  if (n < 2) throw DomainError("factorize requires n >= 2, got " + std::to_string(n));
  if (n >= kModulusLimit) throw DomainError("factorize requires n < 2^63");
  Factorization out;
  for (u64 q = 2; q <= n / q; q += (q == 2 ? 1 : 2)) {
    if (n % q != 0) continue;
    unsigned e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    out.push_back({q, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

u64 euler_phi(u64 n) {
  if (n == 0) throw DomainError("euler_phi requires n >= 1");
  if (n == 1) return 1;
  u64 phi = n;
  for (const auto& [q, e] : factorize(n)) {
    phi = phi / q * (q - 1);
  }
  return phi;
}

std::vector<u64> order_test_primes(OddPrime p) {
  std::vector<u64> primes;
  for (const auto& pp : factorize(p.value() - 1)) primes.push_back(pp.prime);
  return primes;
}

bool is_primitive_root(u64 g, OddPrime p, const std::vector<u64>& primes_of_p_minus_1) {
  const u64 pv = p.value();
  if (g == 0 || g >= pv) return false;
  for (u64 q : primes_of_p_minus_1) {
    if (pow_mod(g, (pv - 1) / q, pv) == 1) return false;
  }
  return true;
}

bool is_primitive_root(u64 g, OddPrime p) {
  return is_primitive_root(g, p, order_test_primes(p));
}

PrimitiveRootSet primitive_roots(OddPrime p) {
  const auto primes = order_test_primes(p);
  PrimitiveRootSet set{p, {}};
  for (u64 g = 1; g < p.value(); ++g) {
    if (is_primitive_root(g, p, primes)) set.roots.push_back(g);
  }
  return set;
}

u64 smallest_primitive_root(OddPrime p) {
  const auto primes = order_test_primes(p);
  for (u64 g = 2; g < p.value(); ++g) {
    if (is_primitive_root(g, p, primes)) return g;
  }
  // p = 3 falls through only if the order test is broken.
  throw InvariantError("no primitive root found for " + std::to_string(p.value()));
}

u64 multiplicative_order(u64 g, OddPrime p) {
  const u64 pv = p.value();
  if (g % pv == 0) throw DomainError("order of 0 is undefined");
  u64 order = pv - 1;
  for (const auto& [q, e] : factorize(pv - 1)) {
    for (unsigned i = 0; i < e && order % q == 0; ++i) {
      if (pow_mod(g, order / q, pv) != 1) break;
      order /= q;
    }
  }
  return order;
}

std::vector<std::pair<u64, u64>> inverse_pairs(OddPrime p) {
  const u64 pv = p.value();
  std::vector<std::pair<u64, u64>> pairs;
  for (u64 g : primitive_roots(p).roots) {
    const u64 inv = pow_mod(g, pv - 2, pv);
    if (g <= inv) pairs.emplace_back(g, inv);
  }
  return pairs;
}

}  // namespace sqmodp
