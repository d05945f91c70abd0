#pragma once

#include <vector>

#include "sqmodp/common.hpp"
#include "sqmodp/modarith.hpp"

namespace sqmodp {

/// Orbit of x_{i+1} = a * x_i (mod m) from x_0 = 1, up to (not including)
/// the return to 1. period == states.size().
struct GeneratorCycle {
  u64 modulus;
  u64 multiplier;
  std::vector<u64> states;
  u64 period;
};

/// Orbit of x_i = g^2 * x_{i-1} (mod p) from x_0 = 1: the quadratic residues
/// in generation order, (p-1)/2 of them.
struct SquareCycle {
  OddPrime p;
  u64 g;
  std::vector<u64> states;
};

/// Iterates the multiplicative generator until it revisits 1. At most m
/// steps are taken. @throws DomainError unless 1 <= a < m and gcd(a, m) = 1.
[[nodiscard]] GeneratorCycle lcg_orbit(u64 a, u64 m);

/// The full (p-1)-cycle 1, g, g^2, ..., g^(p-2).
/// @throws DomainError if g is not a primitive root of p.
[[nodiscard]] GeneratorCycle generator_cycle(u64 g, OddPrime p);

/// @throws DomainError if g is not a primitive root of p.
[[nodiscard]] SquareCycle square_cycle(u64 g, OddPrime p);

/// {x^2 mod p : 1 <= x <= p-1}, ascending. Brute force; independent of the
/// generator route.
[[nodiscard]] std::vector<u64> squares_set(OddPrime p);

}  // namespace sqmodp
