#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sqmodp {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Largest modulus accepted anywhere in the library (exclusive).
inline constexpr u64 kModulusLimit = u64{1} << 63;

/// A mathematical precondition on the inputs failed: non-prime modulus,
/// non-primitive root, out-of-range residue and so on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An internal consistency check failed. Seeing one means a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exact rational with positive denominator, always in lowest terms.
struct Rational {
  i64 num = 0;
  i64 den = 1;

  constexpr Rational() = default;
  constexpr Rational(i64 n, i64 d = 1) : num(n), den(d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const i64 g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  [[nodiscard]] constexpr double to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }

  friend constexpr bool operator==(const Rational&, const Rational&) = default;
};

std::string to_string(const Rational& r);

}  // namespace sqmodp
