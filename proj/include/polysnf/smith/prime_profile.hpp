#pragma once

#include <cstddef>
#include <vector>

#include "polysnf/algebra/factor.hpp"
#include "polysnf/error.hpp"
#include "polysnf/smith/smith.hpp"

namespace polysnf {

struct PrimeProfile {
  Polynomial prime;
  /// s_1 <= .. <= s_l: exponent of p in each invariant factor.
  std::vector<unsigned> exponents;
};

/// Multiplicity of p in f (f nonzero, p nonconstant).
inline unsigned valuation(Polynomial f, const Polynomial& p) {
  if (f.is_zero()) throw InvalidArgument("valuation of zero");
  unsigned v = 0;
  while (auto q = try_divide(f, p)) {
    f = std::move(*q);
    ++v;
  }
  return v;
}

/// Accepts an irreducible polynomial of K[x1], or x_i - f_i with f_i in
/// the earlier variables (linear in x_i with constant leading coefficient).
inline void check_prime_shape(const Polynomial& p) {
  if (p.is_constant()) throw InvalidArgument("prime must be nonconstant");
  if (p.is_univariate_in(0)) {
    if (!is_irreducible_univariate(p)) throw Reducible("polynomial " + p.to_string() + " is reducible");
    return;
  }
  const std::size_t i = *p.max_var();
  if (p.degree_in(i) != 1 || !p.coefficient_in(i, 1).is_nonzero_constant())
    throw InvalidArgument("prime must be univariate in x1 or of the form x_i - f_i(x_1..x_{i-1})");
}

/// SNF of F with respect to the prime p: s_i = v_p(d_i) - v_p(d_{i-1}).
inline PrimeProfile snf_wrt_prime(const PolyMatrix& f, const Polynomial& p, const SmithOptions& options = {}) {
  if (!same_ring(f.ring(), p.ring())) throw AmbientMismatch();
  if (!f.is_square()) throw InvalidArgument("prime profile needs a square matrix");
  check_prime_shape(p);
  SmithData data = determinantal_divisors(f, options);
  if (data.gamma != f.rows()) throw InvalidArgument("prime profile needs full rank");
  PrimeProfile out{p.monic(), {}};
  unsigned prev = 0;
  for (std::size_t i = 1; i <= data.gamma; ++i) {
    unsigned v = valuation(data.divisors[i], p);
    out.exponents.push_back(v - prev);
    prev = v;
  }
  return out;
}

}  // namespace polysnf
