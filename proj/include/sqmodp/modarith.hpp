#pragma once

/**
 * @file modarith.hpp
 * @brief Residue arithmetic modulo m < 2^63 and the Legendre symbol.
 *
 * The symbol is available through two independent routes: Euler's
 * criterion (one modular exponentiation) and the reciprocity recursion
 * (no exponentiation at all). Tests pin them against each other and
 * against exhaustive squaring.
 *
 * Convention: (a/p) = 0 when p divides a.
 */

#include <cstdint>
#include <optional>

#include "sqmodp/common.hpp"

namespace sqmodp {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
[[nodiscard]] bool is_prime(u64 n) noexcept;

/// An odd prime p, 3 <= p < 2^63. Checked at construction.
class OddPrime {
 public:
  /// @throws DomainError if @p p is even, composite or too large.
  explicit OddPrime(u64 p);

  [[nodiscard]] constexpr u64 value() const noexcept { return p_; }
  constexpr operator u64() const noexcept { return p_; }  // NOLINT

  friend constexpr bool operator==(OddPrime, OddPrime) = default;

 private:
  u64 p_;
};

/// A value in [0, modulus) tagged with its modulus.
class Residue {
 public:
  /// Reduces @p value modulo @p modulus. @throws DomainError if modulus < 2.
  Residue(u64 value, u64 modulus);

  [[nodiscard]] u64 value() const noexcept { return value_; }
  [[nodiscard]] u64 modulus() const noexcept { return modulus_; }

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  u64 value_;
  u64 modulus_;
};

enum class Symbol : std::int8_t { kNonResidue = -1, kZero = 0, kResidue = 1 };

[[nodiscard]] constexpr int to_int(Symbol s) noexcept { return static_cast<int>(s); }

/// (a * b) mod m through a 128-bit intermediate. Requires 2 <= m < 2^63.
[[nodiscard]] u64 mul_mod(u64 a, u64 b, u64 m);

/// base^exp mod m by square-and-multiply; exp = 0 gives 1 mod m.
[[nodiscard]] u64 pow_mod(u64 base, u64 exp, u64 m);

/// Reduces a signed integer into [0, m).
[[nodiscard]] u64 reduce(i64 a, u64 m);

/// Euler's criterion: a^((p-1)/2) mod p mapped to {1, -1}.
[[nodiscard]] Symbol legendre_euler(i64 a, OddPrime p);

/// Reciprocity recursion. Strips factors of two with the (2/n) rule and
/// flips numerator and denominator, never exponentiating.
[[nodiscard]] Symbol legendre_reciprocity(i64 a, OddPrime p);

/// Symbol predicted from the congruence class of p alone.
/// Supported a: -1 (mod 4), 2 (mod 8), 3 (mod 12), 5 (mod 5), 6 (mod 24).
/// @throws DomainError for any other a, or when p divides a.
[[nodiscard]] Symbol residue_rule(i64 a, OddPrime p);

/// Exponent l in [0, p-2] with g^l = a (mod p), by walking the orbit of g.
/// @throws DomainError if the orbit returns to 1 before reaching a, or a is
/// outside [1, p-1].
[[nodiscard]] u64 discrete_log(u64 g, u64 a, OddPrime p);

/// Smaller square root of a modulo p via discrete_log, or nullopt when a is
/// a non-residue. @p g must be a primitive root of p.
/// @throws DomainError when a = 0 (mod p) or g fails to generate a.
[[nodiscard]] std::optional<u64> sqrt_mod(u64 a, OddPrime p, u64 g);

}  // namespace sqmodp
