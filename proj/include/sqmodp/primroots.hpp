#pragma once

#include <utility>
#include <vector>

#include "sqmodp/common.hpp"
#include "sqmodp/modarith.hpp"

namespace sqmodp {

struct PrimePower {
  u64 prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization, ascending by prime.
using Factorization = std::vector<PrimePower>;

/// Trial division, O(sqrt(n)). @throws DomainError for n < 2 or n >= 2^63.
[[nodiscard]] Factorization factorize(u64 n);

/// Euler's totient via the product formula over factorize(n).
[[nodiscard]] u64 euler_phi(u64 n);

/// Distinct primes dividing p - 1, the input to the order test.
[[nodiscard]] std::vector<u64> order_test_primes(OddPrime p);

/// True iff g has multiplicative order p - 1, i.e. g^((p-1)/q) != 1 for every
/// prime q | p - 1. Values outside [1, p-1] are never primitive roots.
[[nodiscard]] bool is_primitive_root(u64 g, OddPrime p);

/// Same test with the prime divisors of p - 1 precomputed.
[[nodiscard]] bool is_primitive_root(u64 g, OddPrime p, const std::vector<u64>& primes_of_p_minus_1);

struct PrimitiveRootSet {
  OddPrime p;
  std::vector<u64> roots;  ///< ascending; size is euler_phi(p - 1)
};

/// Every primitive root of p in ascending order.
[[nodiscard]] PrimitiveRootSet primitive_roots(OddPrime p);

/// Smallest primitive root of p.
[[nodiscard]] u64 smallest_primitive_root(OddPrime p);

/// Multiplicative order of g modulo p, computed from the factorization of p-1.
[[nodiscard]] u64 multiplicative_order(u64 g, OddPrime p);

/// Partition of the primitive roots into {g, g^-1} pairs with g <= g^-1,
/// ascending by g. Only p = 3 yields a self-paired root, (2, 2).
[[nodiscard]] std::vector<std::pair<u64, u64>> inverse_pairs(OddPrime p);

}  // namespace sqmodp
