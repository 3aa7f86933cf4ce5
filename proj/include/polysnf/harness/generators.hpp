#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "polysnf/automorphism/tame.hpp"
#include "polysnf/error.hpp"
#include "polysnf/harness/pcg.hpp"
#include "polysnf/polymatrix/elimination.hpp"
#include "polysnf/smith/decide.hpp"
#include "polysnf/smith/recognize.hpp"

namespace polysnf::harness {

struct GenSpec {
  std::uint64_t seed = 1;
  std::size_t n = 2;
  std::size_t l = 2;
  std::size_t m = 2;
  std::size_t elem_steps = 3;
  unsigned degree_cap = 2;
  Field field = Field::rationals();

  void validate() const {
    if (n < 2 || n > 4) throw InvalidArgument("gen spec: n must be in 2..4");
    if (l < 1 || l > 5 || m < 1 || m > 5) throw InvalidArgument("gen spec: l and m must be in 1..5");
    if (elem_steps > 64) throw InvalidArgument("gen spec: elem_steps must be at most 64");
    if (degree_cap > 4) throw InvalidArgument("gen spec: degree_cap must be at most 4");
  }

  RingPtr ring() const { return make_standard_ring(field, n); }
};

struct UnimodularSample {
  PolyMatrix matrix;
  /// Product of the determinants of the elementary factors.
  Rational determinant;
};

/// Nonzero unit of the field: +-1, +-2 over Q, anything nonzero over F_p.
inline Rational random_unit(const Field& field, Pcg32& rng) {
  if (field.is_rationals()) {
    static const std::vector<long> units{-2, -1, 1, 2};
    return Rational(rng.pick(units));
  }
  const Integer& p = field.characteristic();
  const long bound = p.fits_slong_p() && p < 1000 ? p.get_si() : 1000;
  return field.from_int(rng.range(1, bound - 1));
}

/// Polynomial for an add-multiple step: up to 3 terms, coefficients in
/// {-2..2} \ {0}, total degree <= degree_cap.
inline Polynomial random_multiplier(const RingPtr& ring, Pcg32& rng, unsigned degree_cap) {
  for (;;) {
    Polynomial g = random_poly(ring, rng, {3, degree_cap, 2});
    if (!g.is_zero()) return g;
  }
}

/// Product of `steps` elementary matrices: add a multiple of one row to
/// another, swap two rows, or scale a row by a unit.
inline UnimodularSample random_unimodular(const RingPtr& ring, Pcg32& rng, std::size_t size, std::size_t steps,
                                          unsigned degree_cap) {
  UnimodularSample out{PolyMatrix::identity(ring, size), Rational(1)};
  const Field& field = ring->field();
  for (std::size_t s = 0; s < steps; ++s) {
    std::uint32_t kind = size < 2 ? 2 : rng.below(5);
    if (kind <= 2 && size >= 2) {
      auto i = rng.below(static_cast<std::uint32_t>(size));
      auto j = rng.below(static_cast<std::uint32_t>(size - 1));
      if (j >= i) ++j;
      Polynomial g = random_multiplier(ring, rng, degree_cap);
      for (std::size_t c = 0; c < size; ++c) out.matrix(i, c) = out.matrix(i, c) + g * out.matrix(j, c);
    } else if (kind == 3) {
      auto i = rng.below(static_cast<std::uint32_t>(size));
      auto j = rng.below(static_cast<std::uint32_t>(size - 1));
      if (j >= i) ++j;
      for (std::size_t c = 0; c < size; ++c) std::swap(out.matrix(i, c), out.matrix(j, c));
      out.determinant = field.neg(out.determinant);
    } else {
      auto i = rng.below(static_cast<std::uint32_t>(size));
      Rational u = random_unit(field, rng);
      for (std::size_t c = 0; c < size; ++c) out.matrix(i, c) = out.matrix(i, c).scaled(u);
      out.determinant = field.mul(out.determinant, u);
    }
  }
  return out;
}

/// l x l unimodular matrix from spec.seed.
inline PolyMatrix gen_unimodular(const GenSpec& spec) {
  spec.validate();
  Pcg32 rng(spec.seed);
  return random_unimodular(spec.ring(), rng, spec.l, spec.elem_steps, spec.degree_cap).matrix;
}

/// Invariant factors h_1 | h_2 | .. | h_gamma whose product has the shape
/// f1(x1) * prod (x_i - f_i)^{t_i}.
struct SnfRecipe {
  std::vector<Polynomial> invariant_factors;

  void validate() const {
    if (invariant_factors.empty()) throw InvalidArgument("recipe has no invariant factors");
    for (const auto& h : invariant_factors)
      if (h.is_zero()) throw InvalidArgument("recipe invariant factors must be nonzero");
    for (std::size_t i = 1; i < invariant_factors.size(); ++i)
      if (!divides(invariant_factors[i - 1], invariant_factors[i]))
        throw InvalidArgument("recipe violates the divisibility chain at position " + std::to_string(i + 1));
    Polynomial prod = Polynomial::one(invariant_factors.front().ring());
    for (const auto& h : invariant_factors) prod = prod * h;
    if (!recognize_determinant_form(prod)) throw InvalidArgument("recipe product is not of triangular form");
  }
};

/// Random recipe of length gamma: each factor multiplies the previous one by
/// a random selection from a small pool of f1 pieces and x_i - f_i factors.
inline SnfRecipe sample_recipe(const RingPtr& ring, Pcg32& rng, std::size_t gamma, unsigned max_total_degree = 5) {
  const std::size_t n = ring->num_vars();
  const Polynomial x1 = Polynomial::variable(ring, 0);
  std::vector<Polynomial> pool;
  // pieces of f1
  for (int k = 0; k < 2; ++k) {
    Polynomial g = x1 + Polynomial::constant(ring, rng.range(-2, 2));
    if (rng.chance(1, 3)) g = g * x1 + Polynomial::constant(ring, rng.range(1, 2));
    pool.push_back(g);
  }
  // one phi_i per variable x2..xn (each variable appears in a single factor)
  for (std::size_t i = 1; i < n; ++i) {
    Polynomial f = random_poly(ring, rng, {2, 2, 2, i});
    pool.push_back(Polynomial::variable(ring, i) - f);
  }
  SnfRecipe out;
  Polynomial h = Polynomial::one(ring);
  unsigned budget = max_total_degree;
  for (std::size_t k = 0; k < gamma; ++k) {
    // later factors are more likely to grow
    std::size_t picks = rng.chance(static_cast<std::uint32_t>(k + 1), static_cast<std::uint32_t>(gamma + 1)) ? 1 : 0;
    if (k + 1 == gamma && rng.chance(1, 2)) ++picks;
    for (std::size_t p = 0; p < picks; ++p) {
      const Polynomial& g = rng.pick(pool);
      // every remaining factor inherits g, so charge the budget accordingly
      unsigned cost = g.total_degree() * static_cast<unsigned>(gamma - k);
      if (cost > budget) continue;
      budget -= cost;
      h = h * g;
    }
    out.invariant_factors.push_back(h);
  }
  return out;
}

/// Random f1 * prod (x_i - f_i)^{t_i} with deg f1 <= 4, t_i <= 3 and
/// deg f_i <= 2; the unit is drawn from random_unit.
inline DeterminantForm sample_form(const RingPtr& ring, Pcg32& rng) {
  const std::size_t n = ring->num_vars();
  Polynomial f1 = Polynomial::one(ring);
  for (;;) {
    f1 = random_poly(ring, rng, {3, 4, 3, 1});
    if (!f1.is_zero()) break;
  }
  DeterminantForm form{random_unit(ring->field(), rng), f1.monic(), {}};
  for (std::size_t i = 1; i < n; ++i) {
    if (rng.chance(1, 4)) continue;
    Polynomial f = random_poly(ring, rng, {3, 2, 3, i});
    form.factors.push_back({i, f, static_cast<unsigned>(rng.range(1, 3))});
  }
  return form;
}

enum class Padding { None, Zero, Scaled, Identity };

struct GroundTruthInstance {
  PolyMatrix f;
  PolyMatrix s;
  PolyMatrix u;
  PolyMatrix v;
  VerdictKind expected = VerdictKind::Equivalent;
  /// Witness order for NotEquivalent.
  std::size_t expected_k = 0;
};

/// F = U * S * V with S = diag(recipe) padded to l x m.
inline GroundTruthInstance gen_equivalent_instance(const GenSpec& spec, const SnfRecipe& recipe) {
  spec.validate();
  recipe.validate();
  const RingPtr& ring = recipe.invariant_factors.front().ring();
  if (ring->num_vars() != spec.n || !(ring->field() == spec.field))
    throw AmbientMismatch("recipe ring does not match the spec");
  if (recipe.invariant_factors.size() > std::min(spec.l, spec.m))
    throw InvalidArgument("recipe longer than min(l, m)");
  Pcg32 rng(spec.seed);
  GroundTruthInstance out;
  out.s = PolyMatrix::diagonal(ring, spec.l, spec.m, recipe.invariant_factors);
  out.u = random_unimodular(ring, rng, spec.l, spec.elem_steps, spec.degree_cap).matrix;
  out.v = random_unimodular(ring, rng, spec.m, spec.elem_steps, spec.degree_cap).matrix;
  out.f = out.u * out.s * out.v;
  out.expected = VerdictKind::Equivalent;
  return out;
}

/// Random recipe and instance from one seed (recipe drawn first).
inline GroundTruthInstance gen_equivalent_instance(const GenSpec& spec) {
  spec.validate();
  Pcg32 rng(spec.seed ^ 0x9e3779b97f4a7c15ULL);
  auto gamma = static_cast<std::size_t>(rng.range(1, static_cast<long>(std::min(spec.l, spec.m))));
  return gen_equivalent_instance(spec, sample_recipe(spec.ring(), rng, gamma));
}

struct NegativeOptions {
  Padding padding = Padding::None;
  std::size_t pad = 0;
  bool conjugate = true;
};

/// Base block [[p, q], [0, p]] with p in K[x1] nonconstant and q = x_j - g,
/// so gcd(p, q) = 1 while <p, q> has a common zero. Padded and conjugated
/// versions keep J_1 proper, except identity padding which moves the first
/// non-unit order to pad + 1.
inline GroundTruthInstance gen_negative_instance(const GenSpec& spec, const NegativeOptions& options = {}) {
  spec.validate();
  const RingPtr ring = spec.ring();
  Pcg32 rng(spec.seed);
  const Polynomial x1 = Polynomial::variable(ring, 0);
  Polynomial p = x1 + Polynomial::constant(ring, rng.range(-2, 2));
  if (rng.chance(1, 3)) p = p * x1 + Polynomial::constant(ring, rng.range(1, 2));
  auto j = static_cast<std::size_t>(rng.range(1, static_cast<long>(spec.n) - 1));
  Polynomial q = Polynomial::variable(ring, j) - random_poly(ring, rng, {2, 2, 2, j});

  const std::size_t size = 2 + (options.padding == Padding::None ? 0 : options.pad);
  PolyMatrix base(ring, size, size);
  base(0, 0) = p;
  base(0, 1) = q;
  base(1, 1) = p;
  for (std::size_t k = 2; k < size; ++k) {
    if (options.padding == Padding::Scaled) base(k, k) = p;
    if (options.padding == Padding::Identity) base(k, k) = Polynomial::one(ring);
  }
  GroundTruthInstance out;
  out.s = base;
  out.u = PolyMatrix::identity(ring, size);
  out.v = PolyMatrix::identity(ring, size);
  if (options.conjugate) {
    out.u = random_unimodular(ring, rng, size, spec.elem_steps, spec.degree_cap).matrix;
    out.v = random_unimodular(ring, rng, size, spec.elem_steps, spec.degree_cap).matrix;
  }
  out.f = out.u * base * out.v;
  out.expected = VerdictKind::NotEquivalent;
  out.expected_k = options.padding == Padding::Identity ? options.pad + 1 : 1;
  return out;
}

/// Random tame automorphism with 1..max_steps steps: small integer affine
/// maps or triangular maps whose q_j have degree <= 2.
inline TameAut random_tame(const RingPtr& ring, Pcg32& rng, std::size_t max_steps = 3) {
  const std::size_t n = ring->num_vars();
  std::vector<TameStep> steps;
  auto count = static_cast<std::size_t>(rng.range(1, static_cast<long>(max_steps)));
  for (std::size_t s = 0; s < count; ++s) {
    if (rng.chance(1, 2)) {
      // unit upper triangular times a permutation keeps det = +-1
      std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, Rational(0)));
      for (std::size_t i = 0; i < n; ++i) {
        a[i][i] = 1;
        for (std::size_t k = i + 1; k < n; ++k) a[i][k] = rng.range(-1, 1);
      }
      for (std::size_t i = n; i-- > 1;) std::swap(a[i], a[rng.below(static_cast<std::uint32_t>(i + 1))]);
      std::vector<Rational> c(n);
      for (auto& x : c) x = rng.range(-1, 1);
      steps.emplace_back(AffineStep{a, c});
    } else {
      TriangularStep t{std::vector<Rational>(n), Rational(rng.range(-1, 1)), std::vector<Polynomial>(n, Polynomial(ring))};
      for (auto& a : t.scale) a = rng.chance(1, 2) ? 1 : -1;
      for (std::size_t j = 1; j < n; ++j)
        if (rng.chance(1, 2)) t.q[j] = random_poly(ring, rng, {2, 2, 1, j});
      steps.emplace_back(t);
    }
  }
  return TameAut(ring, std::move(steps));
}

}  // namespace polysnf::harness
