#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "polysnf/algebra/polynomial.hpp"
#include "polysnf/algebra/univariate.hpp"
#include "polysnf/error.hpp"

namespace polysnf {

/// f = unit * prod(factor^multiplicity), factors monic, irreducible and pairwise distinct.
struct Factorization {
  Rational unit;
  std::vector<std::pair<Polynomial, unsigned>> factors;

  Polynomial expand(const RingPtr& ring) const {
    Polynomial p = Polynomial::constant(ring, unit);
    for (const auto& [g, m] : factors) p = p * g.pow(m);
    return p;
  }
};

struct FactorLimits {
  std::size_t max_degree = 64;
  /// Modular factors allowed before subset recombination gives up.
  std::size_t max_modular_factors = 16;
};

namespace dense {

using Factors = std::vector<std::pair<UPoly, unsigned>>;

inline UPoly x_poly() { return UPoly{Rational(0), Rational(1)}; }

/// Square-free decomposition over F_p of a monic polynomial.
inline Factors squarefree_fp(const Field& f, const UPoly& poly) {
  Factors out;
  if (degree(poly) <= 0) return out;
  UPoly c = gcd(f, poly, derivative(f, poly));
  UPoly w = divmod(f, poly, c).first;
  unsigned i = 1;
  while (degree(w) > 0) {
    UPoly y = gcd(f, w, c);
    UPoly fac = divmod(f, w, y).first;
    if (degree(fac) > 0) out.emplace_back(monic(f, fac), i);
    w = y;
    c = divmod(f, c, y).first;
    ++i;
  }
  if (degree(c) > 0) {
    const unsigned long p = f.characteristic().get_ui();
    UPoly root;
    for (std::size_t k = 0; k < c.size(); k += p) root.push_back(c[k]);
    trim(root);
    for (auto& [g, m] : squarefree_fp(f, monic(f, root))) out.emplace_back(g, m * static_cast<unsigned>(p));
  }
  return out;
}

/// Distinct-degree factorization of a square-free monic polynomial over F_p.
inline std::vector<std::pair<UPoly, unsigned>> distinct_degree(const Field& f, UPoly poly) {
  std::vector<std::pair<UPoly, unsigned>> out;
  const Integer& p = f.characteristic();
  UPoly h = rem(f, x_poly(), poly);
  unsigned d = 1;
  while (degree(poly) >= 2 * static_cast<long>(d)) {
    h = powmod(f, h, p, poly);
    UPoly g = gcd(f, poly, sub(f, h, x_poly()));
    if (degree(g) > 0) {
      out.emplace_back(g, d);
      poly = divmod(f, poly, g).first;
      h = rem(f, h, poly);
    }
    ++d;
  }
  if (degree(poly) > 0) out.emplace_back(monic(f, poly), static_cast<unsigned>(degree(poly)));
  return out;
}

/// Splits a product of distinct monic irreducibles of degree d (Cantor-Zassenhaus).
inline std::vector<UPoly> equal_degree(const Field& f, const UPoly& poly, unsigned d, gmp_randclass& rng) {
  const long n = degree(poly);
  std::vector<UPoly> parts{poly};
  if (n == static_cast<long>(d)) return parts;
  const Integer& p = f.characteristic();
  Integer qd;
  mpz_pow_ui(qd.get_mpz_t(), p.get_mpz_t(), d);
  const Integer half = (qd - 1) / 2;
  while (parts.size() < static_cast<std::size_t>(n / d)) {
    UPoly a;
    for (long i = 0; i < n; ++i) a.push_back(Rational(Integer(rng.get_z_range(p))));
    trim(a);
    if (degree(a) <= 0) continue;
    UPoly b;
    if (p == 2) {
      UPoly term = rem(f, a, poly);
      b = term;
      for (unsigned i = 1; i < d; ++i) {
        term = rem(f, mul(f, term, term), poly);
        b = add(f, b, term);
      }
    } else {
      b = sub(f, powmod(f, a, half, poly), UPoly{Rational(1)});
    }
    std::vector<UPoly> next;
    for (auto& u : parts) {
      if (degree(u) == static_cast<long>(d)) {
        next.push_back(u);
        continue;
      }
      UPoly g = gcd(f, u, rem(f, b, u));
      if (degree(g) > 0 && degree(g) < degree(u)) {
        next.push_back(g);
        next.push_back(divmod(f, u, g).first);
      } else {
        next.push_back(u);
      }
    }
    parts = std::move(next);
  }
  for (auto& u : parts) u = monic(f, u);
  return parts;
}

/// Complete factorization of a monic polynomial over F_p.
inline Factors factor_fp(const Field& f, const UPoly& poly) {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x5eed);
  Factors out;
  for (const auto& [sf, mult] : squarefree_fp(f, poly))
    for (const auto& [block, d] : distinct_degree(f, sf))
      for (auto& g : equal_degree(f, block, d, rng)) out.emplace_back(std::move(g), mult);
  return out;
}

/// Yun square-free decomposition over Q of a monic polynomial.
inline Factors squarefree_q(const Field& f, const UPoly& poly) {
  Factors out;
  if (degree(poly) <= 0) return out;
  UPoly dp = derivative(f, poly);
  UPoly b = gcd(f, poly, dp);
  UPoly c = divmod(f, poly, b).first;
  UPoly d = sub(f, divmod(f, dp, b).first, derivative(f, c));
  unsigned i = 1;
  while (degree(c) > 0) {
    UPoly a = gcd(f, c, d);
    if (degree(a) > 0) out.emplace_back(a, i);
    c = divmod(f, c, a).first;
    d = sub(f, divmod(f, d, a).first, derivative(f, c));
    ++i;
  }
  return out;
}

/// Integer coefficients with content 1 and positive leading coefficient.
inline std::vector<Integer> primitive_integer(const UPoly& poly) {
  Integer den = 1;
  for (const auto& c : poly) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  Integer content = 0;
  for (const auto& c : poly) {
    Integer v = c.get_num() * (den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (out.back() < 0) content = -content;
  for (auto& v : out) v /= content;
  return out;
}

inline UPoly to_rational(const std::vector<Integer>& v) {
  UPoly out;
  for (const auto& c : v) out.push_back(Rational(c));
  trim(out);
  return out;
}

/// Irreducible factors over Q of a square-free polynomial, by factoring modulo
/// a prime larger than twice a coefficient bound and recombining subsets.
inline std::vector<UPoly> factor_squarefree_q(const UPoly& poly, const FactorLimits& limits) {
  const Field q = Field::rationals();
  std::vector<UPoly> out;
  std::vector<Integer> g = primitive_integer(poly);
  if (g.size() <= 2) {
    out.push_back(monic(q, to_rational(g)));
    return out;
  }
  if (g.size() - 1 > limits.max_degree)
    throw SizeCapExceeded("univariate factorization degree cap exceeded");

  Integer norm1 = 0;
  for (const auto& c : g) norm1 += abs(c);
  Integer bound = abs(g.back()) * norm1;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), g.size() - 1);
  Integer p = 2 * bound + 1;

  std::vector<UPoly> modular;
  Field fp = Field::rationals();
  for (;;) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    if (g.back() % p == 0) continue;
    fp = Field::prime(p);
    UPoly gp;
    for (const auto& c : g) gp.push_back(fp.reduce(Rational(c)));
    trim(gp);
    gp = monic(fp, gp);
    if (degree(gcd(fp, gp, derivative(fp, gp))) > 0) continue;
    for (auto& [h, m] : factor_fp(fp, gp)) modular.push_back(std::move(h));
    break;
  }
  if (modular.size() > limits.max_modular_factors)
    throw SizeCapExceeded("univariate factorization recombination cap exceeded");

  UPoly rest = to_rational(g);
  std::size_t s = 1;
  while (2 * s <= modular.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      const Rational lc = rest.back();
      UPoly cand{fp.reduce(lc)};
      for (auto i : idx) cand = mul(fp, cand, modular[i]);
      UPoly lifted;
      for (const auto& c : cand) lifted.push_back(fp.symmetric(c));
      trim(lifted);
      UPoly h = to_rational(primitive_integer(lifted));
      auto [quot, r] = divmod(q, rest, h);
      if (r.empty()) {
        out.push_back(monic(q, h));
        rest = to_rational(primitive_integer(quot));
        for (std::size_t k = s; k-- > 0;) modular.erase(modular.begin() + static_cast<long>(idx[k]));
        found = true;
        break;
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == modular.size() - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (degree(rest) > 0) out.push_back(monic(q, rest));
  return out;
}

}  // namespace dense

/// Factorization of a univariate polynomial into monic irreducibles over its
/// coefficient field.
inline Factorization factor_univariate(const Polynomial& f, const FactorLimits& limits = {}) {
  if (f.is_zero()) throw InvalidArgument("cannot factor the zero polynomial");
  Factorization result;
  result.unit = f.leading_coeff();
  auto var = f.max_var();
  if (!var) return result;
  if (!f.is_univariate_in(*var)) throw InvalidArgument("factor_univariate needs a univariate polynomial");

  const Field& field = f.field();
  const RingPtr& ring = f.ring();
  dense::UPoly poly = dense::monic(field, dense::from_polynomial(f, *var));

  std::vector<std::pair<dense::UPoly, unsigned>> pieces;
  if (field.is_prime_field()) {
    pieces = dense::factor_fp(field, poly);
  } else {
    for (const auto& [sf, mult] : dense::squarefree_q(field, poly))
      for (auto& h : dense::factor_squarefree_q(sf, limits)) pieces.emplace_back(std::move(h), mult);
  }
  std::sort(pieces.begin(), pieces.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  for (auto& [h, m] : pieces) result.factors.emplace_back(dense::to_polynomial(ring, h, *var), m);
  return result;
}

/// True when p is a nonconstant univariate polynomial irreducible over its field.
inline bool is_irreducible_univariate(const Polynomial& p) {
  if (p.is_constant()) return false;
  auto fac = factor_univariate(p);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace polysnf
