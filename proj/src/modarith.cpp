#include "sqmodp/modarith.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <string>
#include <utility>

namespace sqmodp {

namespace {

__extension__ typedef unsigned __int128 u128;

void check_modulus(u64 m) {
  if (m < 2) throw DomainError("modulus must be at least 2, got " + std::to_string(m));
  if (m >= kModulusLimit) throw DomainError("modulus must be below 2^63, got " + std::to_string(m));
}

u64 mul_mod_unchecked(u64 a, u64 b, u64 m) noexcept {
  return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

u64 pow_mod_unchecked(u64 base, u64 exp, u64 m) noexcept {
  u64 result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod_unchecked(result, base, m);
    base = mul_mod_unchecked(base, base, m);
    exp >>= 1;
  }
  return result;
}

Symbol from_int(int v) {
  return v > 0 ? Symbol::kResidue : (v < 0 ? Symbol::kNonResidue : Symbol::kZero);
}

}  // namespace

bool is_prime(u64 n) noexcept {
  if (n < 2) return false;
  constexpr std::array<u64, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 q : kBases) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are sufficient below 3.3e24.
  for (u64 a : kBases) {
    u64 x = pow_mod_unchecked(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod_unchecked(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

OddPrime::OddPrime(u64 p) : p_(p) {
  if (p >= kModulusLimit) throw DomainError("modulus must be below 2^63, got " + std::to_string(p));
  if (p < 3 || p % 2 == 0) throw DomainError(std::to_string(p) + " is not an odd prime");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

Residue::Residue(u64 value, u64 modulus) : value_(0), modulus_(modulus) {
  check_modulus(modulus);
  value_ = value % modulus;
}

u64 mul_mod(u64 a, u64 b, u64 m) {
  check_modulus(m);
  return mul_mod_unchecked(a % m, b % m, m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  check_modulus(m);
  return pow_mod_unchecked(base, exp, m);
}

u64 reduce(i64 a, u64 m) {
  check_modulus(m);
  if (a >= 0) return static_cast<u64>(a) % m;
  // -(a + 1) avoids overflow at INT64_MIN.
  const u64 neg = (static_cast<u64>(-(a + 1)) % m + 1) % m;
  return neg == 0 ? 0 : m - neg;
}

Symbol legendre_euler(i64 a, OddPrime p) {
  const u64 r = reduce(a, p);
  if (r == 0) return Symbol::kZero;
  const u64 e = pow_mod_unchecked(r, (p.value() - 1) / 2, p);
  if (e == 1) return Symbol::kResidue;
  if (e == p.value() - 1) return Symbol::kNonResidue;
  throw InvariantError("Euler criterion gave " + std::to_string(e) + " modulo prime " +
                       std::to_string(p.value()));
}

Symbol legendre_reciprocity(i64 a, OddPrime p) {
  u64 num = reduce(a, p);
  u64 den = p.value();
  int sign = 1;
  // Intermediate denominators stay odd but may be composite; the Jacobi
  // recursion is still valid there and collapses to the Legendre symbol.
  while (num != 0) {
    while ((num & 1) == 0) {
      num >>= 1;
      const u64 r8 = den % 8;
      if (r8 == 3 || r8 == 5) sign = -sign;
    }
    std::swap(num, den);
    if (num % 4 == 3 && den % 4 == 3) sign = -sign;
    num %= den;
  }
  return den == 1 ? from_int(sign) : Symbol::kZero;
}

Symbol residue_rule(i64 a, OddPrime p) {
  const u64 pv = p.value();
  if (reduce(a, p) == 0) {
    throw DomainError(std::to_string(pv) + " divides " + std::to_string(a));
  }
  const auto pm = [pv](u64 m, std::initializer_list<u64> classes) {
    const u64 r = pv % m;
    for (u64 c : classes) {
      if (r == c) return Symbol::kResidue;
    }
    return Symbol::kNonResidue;
  };
  switch (a) {
    case -1: return pm(4, {1});
    case 2: return pm(8, {1, 7});
    case 3: return pm(12, {1, 11});
    case 5: return pm(5, {1, 4});
    case 6: return pm(24, {1, 5, 19, 23});
    default:
      throw DomainError("no congruence rule for a = " + std::to_string(a) +
                        " (supported: -1, 2, 3, 5, 6)");
  }
}

u64 discrete_log(u64 g, u64 a, OddPrime p) {
  const u64 pv = p.value();
  if (a == 0 || a >= pv) {
    throw DomainError("discrete_log target must lie in [1, p-1], got " + std::to_string(a));
  }
  if (g == 0 || g >= pv) {
    throw DomainError("discrete_log base must lie in [1, p-1], got " + std::to_string(g));
  }
  u64 x = 1;
  for (u64 l = 0; l + 1 < pv; ++l) {
    if (x == a) return l;
    x = mul_mod_unchecked(x, g, pv);
    if (x == 1) break;
  }
  throw DomainError(std::to_string(a) + " is not a power of " + std::to_string(g) + " modulo " +
                    std::to_string(pv) + "; base is not a primitive root");
}

std::optional<u64> sqrt_mod(u64 a, OddPrime p, u64 g) {
  const u64 pv = p.value();
  a %= pv;
  if (a == 0) throw DomainError("sqrt_mod argument is divisible by " + std::to_string(pv));
  if (legendre_euler(static_cast<i64>(a), p) == Symbol::kNonResidue) return std::nullopt;
  const u64 l = discrete_log(g, a, p);
  if (l % 2 != 0) {
    throw DomainError("odd discrete log for a quadratic residue; " + std::to_string(g) +
                      " is not a primitive root of " + std::to_string(pv));
  }
  const u64 r = pow_mod_unchecked(g, l / 2, pv);
  if (mul_mod_unchecked(r, r, pv) != a) throw InvariantError("square root check failed");
  return std::min(r, pv - r);
}

}  // namespace sqmodp
