#include "sqmodp/genseq.hpp"

#include <numeric>
#include <string>

#include "sqmodp/primroots.hpp"

namespace sqmodp {

GeneratorCycle lcg_orbit(u64 a, u64 m) {
  if (m < 2 || m >= kModulusLimit) throw DomainError("modulus must lie in [2, 2^63)");
  if (a == 0 || a >= m) {
    throw DomainError("multiplier must lie in [1, m-1], got " + std::to_string(a));
  }
  if (std::gcd(a, m) != 1) {
    throw DomainError("multiplier " + std::to_string(a) + " shares a factor with " +
                      std::to_string(m) + "; the orbit never returns to 1");
  }
  GeneratorCycle cycle{m, a, {}, 0};
  u64 x = 1;
  for (u64 step = 0; step < m; ++step) {
    cycle.states.push_back(x);
    x = mul_mod(a, x, m);
    if (x == 1) {
      cycle.period = cycle.states.size();
      return cycle;
    }
  }
  throw InvariantError("orbit of " + std::to_string(a) + " did not close within " +
                       std::to_string(m) + " steps");
}

GeneratorCycle generator_cycle(u64 g, OddPrime p) {
  if (!is_primitive_root(g, p)) {
    throw DomainError(std::to_string(g) + " is not a primitive root of " +
                      std::to_string(p.value()));
  }
  auto cycle = lcg_orbit(g, p);
  if (cycle.period != p.value() - 1) throw InvariantError("primitive root orbit is not full");
  return cycle;
}

SquareCycle square_cycle(u64 g, OddPrime p) {
  if (!is_primitive_root(g, p)) {
    throw DomainError(std::to_string(g) + " is not a primitive root of " +
                      std::to_string(p.value()));
  }
  const u64 pv = p.value();
  const u64 g2 = mul_mod(g, g, pv);
  const u64 half = (pv - 1) / 2;
  SquareCycle out{p, g, {}};
  out.states.reserve(half);
  u64 x = 1;
  for (u64 i = 0; i < half; ++i) {
    out.states.push_back(x);
    x = mul_mod(g2, x, pv);
  }
  if (x != 1) throw InvariantError("square cycle did not close after (p-1)/2 steps");
  return out;
}

std::vector<u64> squares_set(OddPrime p) {
  const u64 pv = p.value();
  std::vector<bool> hit(pv, false);
  for (u64 x = 1; x < pv; ++x) hit[mul_mod(x, x, pv)] = true;
  std::vector<u64> out;
  out.reserve((pv - 1) / 2);
  for (u64 r = 1; r < pv; ++r) {
    if (hit[r]) out.push_back(r);
  }
  return out;
}

}  // namespace sqmodp
