#pragma once

#include <cstdint>
#include <vector>

#include "polysnf/algebra/polynomial.hpp"

namespace polysnf::harness {

/// PCG32 (XSH-RR output, 64-bit LCG state).
///
///   state' = state * 6364136223846793005 + increment
///   increment = (0xda3e39cb94b95bdb << 1) | 1
///
/// Seeding follows the reference pcg32_srandom_r: state = 0, advance,
/// state += seed, advance. Bounded draws use the reference rejection
/// threshold (-bound % bound), so every implementation that follows these
/// constants produces the same stream.
class Pcg32 {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kStream = 0xda3e39cb94b95bdbULL;

  explicit Pcg32(std::uint64_t seed, std::uint64_t stream = kStream) : inc_((stream << 1U) | 1U) {
    next();
    state_ += seed;
    next();
  }

  std::uint32_t next() {
    std::uint64_t old = state_;
    state_ = old * kMultiplier + inc_;
    auto xorshifted = static_cast<std::uint32_t>(((old >> 18U) ^ old) >> 27U);
    auto rot = static_cast<std::uint32_t>(old >> 59U);
    return (xorshifted >> rot) | (xorshifted << ((-rot) & 31U));
  }

  /// Uniform in [0, bound).
  std::uint32_t below(std::uint32_t bound) {
    if (bound <= 1) return 0;
    std::uint32_t threshold = (-bound) % bound;
    for (;;) {
      std::uint32_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform in [lo, hi].
  long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint32_t>(hi - lo + 1))); }

  bool chance(std::uint32_t numerator, std::uint32_t denominator) { return below(denominator) < numerator; }

  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[below(static_cast<std::uint32_t>(items.size()))];
  }

 private:
  std::uint64_t state_ = 0;
  std::uint64_t inc_;
};

/// Random monomial of total degree <= max_degree in the first num_vars variables.
inline Monomial random_monomial(Pcg32& rng, std::size_t n, std::size_t num_vars, unsigned max_degree) {
  std::vector<Monomial::Exponent> e(n, 0);
  unsigned budget = static_cast<unsigned>(rng.range(0, max_degree));
  for (unsigned k = 0; k < budget; ++k) e[rng.below(static_cast<std::uint32_t>(num_vars))] += 1;
  return Monomial(e);
}

struct PolySpec {
  std::size_t max_terms = 3;
  unsigned max_degree = 2;
  long coeff_bound = 2;
  /// Restrict to the first `num_vars` variables (0 means all).
  std::size_t num_vars = 0;
};

/// Random polynomial with up to max_terms terms and nonzero coefficients in
/// [-coeff_bound, coeff_bound]. May be zero after reduction into the field.
inline Polynomial random_poly(const RingPtr& ring, Pcg32& rng, const PolySpec& spec = {}) {
  const std::size_t n = ring->num_vars();
  const std::size_t nv = spec.num_vars == 0 ? n : spec.num_vars;
  std::vector<Term> terms;
  auto count = static_cast<std::size_t>(rng.range(1, static_cast<long>(spec.max_terms)));
  for (std::size_t k = 0; k < count; ++k) {
    long c = rng.range(1, spec.coeff_bound);
    if (rng.chance(1, 2)) c = -c;
    terms.push_back({random_monomial(rng, n, nv, spec.max_degree), Rational(c)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace polysnf::harness
