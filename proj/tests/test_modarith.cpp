#include <doctest.h>

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "oracles.hpp"
#include "sqmodp/modarith.hpp"
#include "sqmodp/primroots.hpp"

using namespace sqmodp;

namespace {

std::vector<int> symbols_euler(u64 p) {
  std::vector<int> out;
  for (u64 a = 1; a < p; ++a) out.push_back(to_int(legendre_euler(static_cast<i64>(a), OddPrime(p))));
  return out;
}

}  // namespace

TEST_CASE("OddPrime validates its argument") {
  CHECK(OddPrime(3).value() == 3);
  CHECK(OddPrime(8191).value() == 8191);
  CHECK_THROWS_AS(OddPrime(2), DomainError);
  CHECK_THROWS_AS(OddPrime(1), DomainError);
  CHECK_THROWS_AS(OddPrime(8), DomainError);
  CHECK_THROWS_AS(OddPrime(9), DomainError);
  CHECK_THROWS_AS(OddPrime(kModulusLimit + 1), DomainError);
  // 2^61 - 1 is a Mersenne prime.
  CHECK(OddPrime((u64{1} << 61) - 1).value() == (u64{1} << 61) - 1);
}

TEST_CASE("is_prime agrees with trial division below 20000") {
  for (u64 n = 0; n < 20000; ++n) REQUIRE(is_prime(n) == oracle::is_prime(n));
  // Strong pseudoprimes to several small bases.
  CHECK_FALSE(is_prime(3215031751ULL));
  CHECK_FALSE(is_prime(3825123056546413051ULL));
  CHECK(is_prime(18446744073709551557ULL));
}

TEST_CASE("mul_mod") {
  CHECK(mul_mod(0, 12345, 8191) == 0);
  CHECK(mul_mod(128, 128, 8191) == 2);
  CHECK(mul_mod(1, 1904, 8191) == 1904);
  CHECK(mul_mod(1904, 1904, 8191) == 4794);
  CHECK(mul_mod(1904, 4794, 8191) == 3002);
  CHECK(mul_mod(1904, 3002, 8191) == 6681);
  CHECK(mul_mod(1904, 6681, 8191) == 1);

  SUBCASE("no overflow near 2^63") {
    const u64 m = (u64{1} << 62) + 135;  // arbitrary large modulus
    const u64 a = m - 1;
    // (m-1)^2 = 1 (mod m)
    CHECK(mul_mod(a, a, m) == 1);
  }
  CHECK_THROWS_AS((void)mul_mod(1, 1, 1), DomainError);
  CHECK_THROWS_AS((void)mul_mod(1, 1, kModulusLimit), DomainError);
}

TEST_CASE("pow_mod") {
  CHECK(pow_mod(7, 0, 11) == 1);
  CHECK(pow_mod(2, 12, 8191) == 4096);
  CHECK(pow_mod(2, 13, 8191) == 1);
  CHECK(pow_mod(2, (8191 - 1) / 2, 8191) == 1);
  CHECK(pow_mod(5, 0, 2) == 1);
  CHECK_THROWS_AS((void)pow_mod(2, 3, 0), DomainError);
}

TEST_CASE("reduce handles negative and extreme inputs") {
  CHECK(reduce(-1, 11) == 10);
  CHECK(reduce(-11, 11) == 0);
  CHECK(reduce(-12, 11) == 10);
  CHECK(reduce(std::numeric_limits<i64>::min(), 7) ==
        static_cast<u64>(((std::numeric_limits<i64>::min() % 7) + 7) % 7));
}

TEST_CASE("legendre_euler") {
  CHECK(legendre_euler(2, OddPrime(8191)) == Symbol::kResidue);
  CHECK(symbols_euler(11) == std::vector<int>{1, -1, 1, 1, 1, -1, -1, -1, 1, -1});
  CHECK(legendre_euler(0, OddPrime(7)) == Symbol::kZero);
  CHECK(legendre_euler(14, OddPrime(7)) == Symbol::kZero);
  CHECK(legendre_euler(-1, OddPrime(13)) == Symbol::kResidue);
  CHECK(legendre_euler(-1, OddPrime(7)) == Symbol::kNonResidue);
  for (u64 p : oracle::odd_primes_below(200)) CHECK(legendre_euler(1, OddPrime(p)) == Symbol::kResidue);
}

TEST_CASE("legendre_reciprocity") {
  CHECK(legendre_reciprocity(13, OddPrime(13)) == Symbol::kZero);
  CHECK(legendre_reciprocity(2, OddPrime(8191)) == Symbol::kResidue);
  CHECK(legendre_reciprocity(-3, OddPrime(7)) == Symbol::kResidue);
  const OddPrime big((u64{1} << 61) - 1);
  for (i64 a : {2, 3, 5, 7, 1234567, -1, -99}) {
    CHECK(legendre_reciprocity(a, big) == legendre_euler(a, big));
  }
}

TEST_CASE("both symbol routes equal exhaustive squaring for odd p < 1000") {
  for (u64 p : oracle::odd_primes_below(1000)) {
    const OddPrime op(p);
    const auto sq = oracle::squares(p);
    u64 residues = 0;
    for (u64 a = 1; a < p; ++a) {
      const int expected = oracle::legendre(static_cast<i64>(a), p, sq);
      const int euler = to_int(legendre_euler(static_cast<i64>(a), op));
      REQUIRE(euler == expected);
      REQUIRE(to_int(legendre_reciprocity(static_cast<i64>(a), op)) == expected);
      residues += euler == 1;
    }
    REQUIRE(residues == (p - 1) / 2);
  }
}

TEST_CASE("multiplicativity for odd p < 500") {
  for (u64 p : oracle::odd_primes_below(500)) {
    const OddPrime op(p);
    std::vector<int> sym(p);
    for (u64 a = 1; a < p; ++a) sym[a] = to_int(legendre_euler(static_cast<i64>(a), op));
    for (u64 a = 1; a < p; ++a) {
      for (u64 b = 1; b < p; ++b) {
        REQUIRE(to_int(legendre_euler(static_cast<i64>(a * b), op)) == sym[a] * sym[b]);
      }
    }
  }
}

TEST_CASE("residue_rule") {
  CHECK(residue_rule(2, OddPrime(8191)) == Symbol::kResidue);
  CHECK(residue_rule(6, OddPrime(23)) == Symbol::kResidue);
  CHECK(legendre_euler(6, OddPrime(23)) == Symbol::kResidue);
  CHECK(residue_rule(-1, OddPrime(13)) == Symbol::kResidue);
  CHECK(residue_rule(-1, OddPrime(11)) == Symbol::kNonResidue);

  SUBCASE("agrees with Euler's criterion for all odd p < 10^4") {
    for (u64 p : oracle::odd_primes_below(10000)) {
      const OddPrime op(p);
      for (i64 a : {-1, 2, 3, 5, 6}) {
        if (reduce(a, p) == 0) continue;
        REQUIRE(residue_rule(a, op) == legendre_euler(a, op));
      }
    }
  }

  CHECK_THROWS_AS((void)residue_rule(7, OddPrime(11)), DomainError);
  CHECK_THROWS_AS((void)residue_rule(3, OddPrime(3)), DomainError);
  CHECK_THROWS_AS((void)residue_rule(5, OddPrime(5)), DomainError);
  CHECK_THROWS_AS((void)residue_rule(6, OddPrime(3)), DomainError);
}

TEST_CASE("discrete_log") {
  CHECK(discrete_log(2, 1, OddPrime(11)) == 0);
  CHECK(discrete_log(2, 5, OddPrime(11)) == 4);
  CHECK(discrete_log(3, 1, OddPrime(5)) == 0);

  SUBCASE("round-trips pow_mod for p < 200") {
    for (u64 p : oracle::odd_primes_below(200)) {
      const OddPrime op(p);
      for (u64 g : oracle::primitive_roots(p)) {
        for (u64 a = 1; a < p; ++a) {
          const u64 l = discrete_log(g, a, op);
          REQUIRE(l <= p - 2);
          REQUIRE(pow_mod(g, l, p) == a);
        }
      }
    }
  }

  // 3 has order 5 modulo 11, so 2 is never reached.
  CHECK_THROWS_AS((void)discrete_log(3, 2, OddPrime(11)), DomainError);
  CHECK_THROWS_AS((void)discrete_log(2, 0, OddPrime(11)), DomainError);
  CHECK_THROWS_AS((void)discrete_log(2, 11, OddPrime(11)), DomainError);
}

TEST_CASE("sqrt_mod") {
  const OddPrime p8191(8191);
  for (u64 g : primitive_roots(p8191).roots) {
    REQUIRE(sqrt_mod(2, p8191, g) == std::optional<u64>{128});
  }
  CHECK(sqrt_mod(1, OddPrime(29), 2) == std::optional<u64>{1});
  CHECK_FALSE(sqrt_mod(2, OddPrime(11), 2).has_value());
  CHECK_THROWS_AS((void)sqrt_mod(0, OddPrime(11), 2), DomainError);
  CHECK_THROWS_AS((void)sqrt_mod(22, OddPrime(11), 2), DomainError);

  SUBCASE("squaring round trip for odd p < 200") {
    for (u64 p : oracle::odd_primes_below(200)) {
      const OddPrime op(p);
      const u64 g = oracle::primitive_roots(p).front();
      const auto sq = oracle::squares(p);
      for (u64 a = 1; a < p; ++a) {
        const auto r = sqrt_mod(a, op, g);
        REQUIRE(r.has_value() == sq.contains(a));
        if (r) {
          REQUIRE(mul_mod(*r, *r, p) == a);
          REQUIRE(*r <= (p - 1) / 2);
        }
      }
      for (u64 r = 1; r < p; ++r) {
        REQUIRE(sqrt_mod(r * r % p, op, g) == std::optional<u64>{std::min(r, p - r)});
      }
    }
  }
}
