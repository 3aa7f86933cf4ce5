#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "polysnf/algebra/factor.hpp"
#include "polysnf/algebra/parse.hpp"
#include "polysnf/automorphism/tame.hpp"
#include "polysnf/groebner/groebner.hpp"
#include "polysnf/harness/generators.hpp"
#include "polysnf/harness/oracles.hpp"
#include "polysnf/polymatrix/minors.hpp"
#include "polysnf/polymatrix/quotient.hpp"
#include "polysnf/smith/automorphic.hpp"
#include "polysnf/smith/decide.hpp"
#include "polysnf/smith/prime_profile.hpp"
#include "polysnf/smith/recognize.hpp"
#include "polysnf/smith/smith.hpp"

namespace polysnf::harness {

/// Failure detail, or nullopt when the case passes.
using CaseResult = std::optional<std::string>;
using PropertyCheck = std::function<CaseResult(Pcg32&, const SmithOptions&)>;

struct Property {
  std::string name;
  std::size_t default_cases;
  PropertyCheck check;
};

namespace props {

inline std::string str(const Polynomial& p) { return p.to_string(); }

inline std::string str(const PolyMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

inline RingPtr ring(std::size_t n, long p = 0) {
  return make_standard_ring(p ? Field::prime(Integer(p)) : Field::rationals(), n);
}

inline PolyMatrix random_matrix(const RingPtr& r, Pcg32& rng, std::size_t rows, std::size_t cols,
                                const PolySpec& spec) {
  PolyMatrix m(r, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (rng.chance(3, 4)) m(i, j) = random_poly(r, rng, spec);
  return m;
}

inline Polynomial leibniz_minor(const PolyMatrix& a, const IndexSet& rows, const IndexSet& cols) {
  std::vector<std::vector<Polynomial>> sub;
  for (auto i : rows) {
    sub.emplace_back();
    for (auto j : cols) sub.back().push_back(a(i, j));
  }
  return oracle::leibniz_det(sub, a.ring());
}

inline std::string chain_violation(const SmithData& d) {
  if (d.divisors.empty() || !d.divisors.front().is_one()) return "d_0 != 1";
  for (std::size_t i = 1; i < d.divisors.size(); ++i)
    if (!divides(d.divisors[i - 1], d.divisors[i])) return "d_" + std::to_string(i - 1) + " does not divide d_" + std::to_string(i);
  for (std::size_t i = 1; i < d.invariant_factors.size(); ++i)
    if (!divides(d.invariant_factors[i - 1], d.invariant_factors[i]))
      return "h_" + std::to_string(i) + " does not divide h_" + std::to_string(i + 1);
  return {};
}

inline GenSpec small_spec(Pcg32& rng, std::size_t max_n = 3, std::size_t max_l = 3) {
  GenSpec s;
  s.seed = rng.next();
  s.n = static_cast<std::size_t>(rng.range(2, static_cast<long>(max_n)));
  s.l = s.m = static_cast<std::size_t>(rng.range(1, static_cast<long>(max_l)));
  s.elem_steps = static_cast<std::size_t>(rng.range(1, 3));
  s.degree_cap = 1 + rng.below(2);
  return s;
}

// --- algebra --------------------------------------------------------------

inline CaseResult ring_axioms(Pcg32& rng, const SmithOptions&) {
  RingPtr r = rng.chance(1, 4) ? ring(3, 7) : ring(3);
  auto a = random_poly(r, rng, {4, 3, 5}), b = random_poly(r, rng, {4, 3, 5}), c = random_poly(r, rng, {4, 3, 5});
  if ((a * b) * c != a * (b * c)) return "mul not associative";
  if ((a + b) + c != a + (b + c)) return "add not associative";
  if (a * (b + c) != a * b + a * c) return "not distributive";
  if (a * b != b * a || a + b != b + a) return "not commutative";
  return std::nullopt;
}

inline CaseResult gcd_divides(Pcg32& rng, const SmithOptions& opts) {
  RingPtr r = ring(3);
  auto a = random_poly(r, rng, {3, 2, 3}), b = random_poly(r, rng, {3, 2, 3}), c = random_poly(r, rng, {3, 2, 3});
  if (a.is_zero() || b.is_zero() || c.is_zero()) return std::nullopt;
  Polynomial g = opts.gcd(a, b).monic();
  if (!divides(g, a) || !divides(g, b)) return "gcd(" + str(a) + ", " + str(b) + ") = " + str(g) + " does not divide";
  Polynomial gc = opts.gcd(a * c, b * c).monic();
  if (gc != (c * g).monic()) return "gcd(a c, b c) = " + str(gc) + " but c gcd(a, b) = " + str((c * g).monic());
  return std::nullopt;
}

inline CaseResult factor_roundtrip(Pcg32& rng, const SmithOptions&) {
  RingPtr r = rng.chance(1, 2) ? ring(1) : ring(1, 3);
  Polynomial f = Polynomial::one(r);
  for (long k = rng.range(1, 3); k > 0; --k) {
    auto g = random_poly(r, rng, {3, 3, 4});
    if (!g.is_zero()) f = f * g;
  }
  if (f.is_constant()) return std::nullopt;
  auto fac = factor_univariate(f);
  if (fac.expand(r) != f) return "factorization of " + str(f) + " does not re-expand";
  for (const auto& [g, m] : fac.factors)
    if (g.leading_coeff() != 1 || !is_irreducible_univariate(g)) return "factor " + str(g) + " not monic irreducible";
  return std::nullopt;
}

inline CaseResult substitute_homomorphism(Pcg32& rng, const SmithOptions&) {
  RingPtr r = ring(3);
  auto f = random_poly(r, rng, {3, 3, 3}), g = random_poly(r, rng, {3, 3, 3});
  std::vector<std::optional<Polynomial>> images(3);
  images[rng.below(3)] = random_poly(r, rng, {3, 2, 3});
  images[rng.below(3)] = random_poly(r, rng, {2, 2, 3});
  if (substitute(f * g, images) != substitute(f, images) * substitute(g, images)) return "product not preserved";
  if (substitute(f + g, images) != substitute(f, images) + substitute(g, images)) return "sum not preserved";
  return std::nullopt;
}

// --- groebner -------------------------------------------------------------

inline std::vector<Polynomial> random_generators(const RingPtr& r, Pcg32& rng, std::size_t count, const PolySpec& spec) {
  std::vector<Polynomial> gens;
  for (std::size_t k = 0; k < count; ++k) gens.push_back(random_poly(r, rng, spec));
  return gens;
}

inline bool all_zero(const std::vector<Polynomial>& v) {
  return std::all_of(v.begin(), v.end(), [](const Polynomial& g) { return g.is_zero(); });
}

inline CaseResult generators_reduce(Pcg32& rng, const SmithOptions& opts) {
  auto n = static_cast<std::size_t>(rng.range(1, 3));
  RingPtr r = rng.chance(1, 3) ? ring(n, 5) : ring(n);
  auto gens = random_generators(r, rng, static_cast<std::size_t>(rng.range(1, 3)), {3, 3, 3});
  if (all_zero(gens)) return std::nullopt;
  auto gb = groebner_basis(gens, opts.groebner);
  for (const auto& g : gens)
    if (!normal_form(g, gb).is_zero()) return "generator " + str(g) + " does not reduce to zero";
  return std::nullopt;
}

inline CaseResult order_canonical(Pcg32& rng, const SmithOptions& opts) {
  RingPtr r = ring(3);
  auto gens = random_generators(r, rng, 3, {3, 2, 3});
  if (all_zero(gens)) return std::nullopt;
  auto ref = groebner_basis(gens, opts.groebner);
  std::vector<std::size_t> perm{0, 1, 2};
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<Polynomial> g2;
    for (auto k : perm) g2.push_back(gens[k]);
    if (groebner_basis(g2, opts.groebner) != ref) return "basis depends on generator order";
  }
  return std::nullopt;
}

inline CaseResult univariate_unit_oracle(Pcg32& rng, const SmithOptions& opts) {
  long p = rng.chance(1, 2) ? 0 : 3;
  RingPtr r = ring(2, p);
  auto f = random_poly(r, rng, {3, 3, 2, 1}), g = random_poly(r, rng, {3, 3, 2, 1});
  if (f.is_zero() && g.is_zero()) return std::nullopt;
  bool expected = oracle::euclid_coprime(oracle::to_uni(f, 0, p), oracle::to_uni(g, 0, p));
  if (is_unit_ideal(Ideal({f, g}), opts.groebner) != expected)
    return "unit test disagrees with Euclid on <" + str(f) + ", " + str(g) + ">";
  return std::nullopt;
}

inline CaseResult multivariate_unit_oracle(Pcg32& rng, const SmithOptions& opts) {
  long p = rng.chance(1, 2) ? 2 : 3;
  RingPtr r = ring(2, p);
  auto gens = random_generators(r, rng, static_cast<std::size_t>(rng.range(2, 3)), {3, 2, 2});
  if (all_zero(gens)) return std::nullopt;
  // certificates have degree <= max(3, d)^n = 9 here; 12 leaves slack
  bool expected = oracle::macaulay_unit(gens, p, 12);
  if (is_unit_ideal(Ideal(gens), opts.groebner) != expected) {
    std::string s;
    for (const auto& g : gens) s += (s.empty() ? "" : ", ") + str(g);
    return "unit test disagrees with Macaulay oracle on <" + s + "> over F_" + std::to_string(p);
  }
  return std::nullopt;
}

// --- polymatrix -----------------------------------------------------------

inline CaseResult cauchy_binet(Pcg32& rng, const SmithOptions& opts) {
  RingPtr r = rng.chance(1, 2) ? ring(2) : ring(3);
  auto l = static_cast<std::size_t>(rng.range(1, 4));
  auto k = static_cast<std::size_t>(rng.range(1, 4));
  auto m = static_cast<std::size_t>(rng.range(1, 4));
  PolyMatrix b = random_matrix(r, rng, l, k, {2, 2, 2});
  PolyMatrix c = random_matrix(r, rng, k, m, {2, 2, 2});
  PolyMatrix a = b * c;
  for (std::size_t order = 1; order <= std::min(l, m); ++order) {
    auto minors = all_k_minors(a, order, opts.minors);
    std::size_t idx = 0;
    for (const auto& rows : combinations(l, order))
      for (const auto& cols : combinations(m, order)) {
        Polynomial sum(r);
        for (const auto& mid : combinations(k, order)) sum += leibniz_minor(b, rows, mid) * leibniz_minor(c, mid, cols);
        if (minors[idx++] != sum) return "minor of order " + std::to_string(order) + " differs for B = " + str(b) + ", C = " + str(c);
      }
  }
  return std::nullopt;
}

inline CaseResult det_multiplicative(Pcg32& rng, const SmithOptions&) {
  RingPtr r = ring(3);
  auto n = static_cast<std::size_t>(rng.range(1, 4));
  PolyMatrix a = random_matrix(r, rng, n, n, {2, 2, 2}), b = random_matrix(r, rng, n, n, {2, 2, 2});
  if (determinant(a * b) != determinant(a) * determinant(b)) return "det(AB) != det(A) det(B) for A = " + str(a);
  return std::nullopt;
}

inline CaseResult rank_mod_bounds(Pcg32& rng, const SmithOptions&) {
  RingPtr r = ring(2);
  static const char* const primes[] = {"x1", "x1 + 1", "x1^2 + 1", "x1^2 - 2"};
  Polynomial p = parse_poly(primes[rng.below(4)], r);
  auto n = static_cast<std::size_t>(rng.range(1, 3));
  PolyMatrix a = random_matrix(r, rng, n, n, {2, 2, 2});
  if (rng.chance(1, 2))
    for (std::size_t j = 0; j < n; ++j) a(0, j) = a(0, j) * p;
  std::size_t full = rank(a), reduced = rank_mod_irreducible(a, p);
  if (reduced > full) return "rank drops above rank for " + str(a);
  if (full == n && divides(p, determinant(a)) && reduced >= n) return "p | det but reduction keeps full rank for " + str(a);
  return std::nullopt;
}

inline CaseResult equivalence_invariance(Pcg32& rng, const SmithOptions& opts) {
  RingPtr r = ring(2);
  auto l = static_cast<std::size_t>(rng.range(1, 2)), m = static_cast<std::size_t>(rng.range(2, 3));
  PolyMatrix f = random_matrix(r, rng, l, m, {2, 2, 2});
  PolyMatrix g = random_unimodular(r, rng, l, 2, 1).matrix * f * random_unimodular(r, rng, m, 2, 1).matrix;
  std::size_t gamma = rank(f);
  if (rank(g) != gamma) return "rank changed";
  for (std::size_t k = 1; k <= gamma; ++k) {
    auto a = reduced_minor_ideal(f, k, opts), b = reduced_minor_ideal(g, k, opts);
    if (a.divisor != b.divisor) return "d_" + std::to_string(k) + " changed for F = " + str(f);
    if (Ideal(a.generators).basis(opts.groebner) != Ideal(b.generators).basis(opts.groebner))
      return "J_" + std::to_string(k) + " changed for F = " + str(f);
  }
  return std::nullopt;
}

// --- smith ----------------------------------------------------------------

inline PolyMatrix matrix_with_structure(Pcg32& rng, const RingPtr& r) {
  auto l = static_cast<std::size_t>(rng.range(1, 3)), m = static_cast<std::size_t>(rng.range(1, 3));
  PolyMatrix a = random_matrix(r, rng, l, m, {2, 2, 2});
  if (rng.chance(1, 2)) {
    Polynomial common = random_poly(r, rng, {2, 1, 2});
    if (!common.is_zero()) a = a.map([&](const Polynomial& e) { return e * common; });
  }
  return a;
}

inline CaseResult divisor_chain(Pcg32& rng, const SmithOptions& opts) {
  RingPtr r = ring(2);
  PolyMatrix a = matrix_with_structure(rng, r);
  if (rng.chance(1, 2)) {
    auto inst = gen_equivalent_instance(small_spec(rng, 2, 3));
    a = inst.f;
  }
  auto d = smith_normal_form(a, opts);
  if (auto why = chain_violation(d); !why.empty()) return why + " for F = " + str(a);
  return std::nullopt;
}

inline CaseResult reduced_minor_identity(Pcg32& rng, const SmithOptions& opts) {
  RingPtr r = ring(2);
  PolyMatrix a = matrix_with_structure(rng, r);
  std::size_t gamma = rank(a);
  for (std::size_t k = 1; k <= gamma; ++k) {
    auto rep = reduced_minor_ideal(a, k, opts);
    auto minors = all_k_minors(a, k, opts.minors);
    if (rep.generators.size() != minors.size()) return "wrong number of reduced minors";
    for (std::size_t j = 0; j < minors.size(); ++j)
      if (rep.generators[j] * rep.divisor != minors[j]) return "d_k b_j != a_j for F = " + str(a);
  }
  return std::nullopt;
}

inline CaseResult snf_unit_ideals(Pcg32& rng, const SmithOptions& opts) {
  RingPtr r = ring(2);
  PolyMatrix a = matrix_with_structure(rng, r);
  auto d = smith_normal_form(a, opts);
  for (std::size_t k = 1; k <= d.gamma; ++k)
    if (!reduced_minor_ideal(d.snf, k, opts).is_unit) return "J_" + std::to_string(k) + "(S) != R for S = " + str(d.snf);
  return std::nullopt;
}

inline CaseResult coprime_multiplicativity(Pcg32& rng, const SmithOptions& opts) {
  RingPtr r = ring(2);
  static const char* const left[] = {"x1", "x1 + 1", "x1^2 + 1"};
  static const char* const right[] = {"x2 - x1", "x2 + x1^2", "x2 + 1"};
  auto size = static_cast<std::size_t>(rng.range(2, 3));
  auto chain = [&](const char* const* pool) {
    std::vector<Polynomial> h;
    Polynomial acc = Polynomial::one(r);
    for (std::size_t k = 0; k < size; ++k) {
      if (rng.chance(1, 2)) acc = acc * parse_poly(pool[rng.below(3)], r);
      h.push_back(acc);
    }
    return PolyMatrix::diagonal(r, size, size, h);
  };
  PolyMatrix b = random_unimodular(r, rng, size, 2, 1).matrix * chain(left) * random_unimodular(r, rng, size, 2, 1).matrix;
  PolyMatrix c = random_unimodular(r, rng, size, 2, 1).matrix * chain(right) * random_unimodular(r, rng, size, 2, 1).matrix;
  if (!gcd(determinant(b), determinant(c)).is_one()) return "constructed determinants are not coprime";
  auto db = determinantal_divisors(b, opts), dc = determinantal_divisors(c, opts), dbc = determinantal_divisors(b * c, opts);
  for (const auto* d : {&db, &dc, &dbc})
    if (auto why = chain_violation(*d); !why.empty()) return why;
  for (std::size_t k = 0; k <= size; ++k)
    if (dbc.divisors[k] != (db.divisors[k] * dc.divisors[k]).monic())
      return "d_" + std::to_string(k) + "(BC) != d_" + std::to_string(k) + "(B) d_" + std::to_string(k) + "(C) for B = " + str(b) + ", C = " + str(c);
  return std::nullopt;
}

inline CaseResult per_prime(Pcg32& rng, const SmithOptions& opts) {
  GenSpec spec = small_spec(rng);
  auto inst = gen_equivalent_instance(spec);
  auto data = smith_normal_form(inst.f, opts);
  if (auto why = chain_violation(data); !why.empty()) return why + " for F = " + str(inst.f);
  if (data.gamma != spec.l) return std::nullopt;
  auto form = recognize_determinant_form(data.divisors.back());
  if (!form) return "d_gamma not recognized for F = " + str(inst.f);
  std::vector<Polynomial> primes;
  if (!form->f1.is_constant())
    for (const auto& [g, m] : factor_univariate(form->f1).factors) primes.push_back(g);
  for (const auto& fac : form->factors) primes.push_back(fac.phi());
  std::vector<Polynomial> products(data.gamma, Polynomial::one(inst.f.ring()));
  for (const auto& p : primes) {
    auto prof = snf_wrt_prime(inst.f, p, opts);
    if (!std::is_sorted(prof.exponents.begin(), prof.exponents.end())) return "profile exponents not sorted";
    for (std::size_t i = 0; i < data.gamma; ++i) products[i] = products[i] * p.pow(prof.exponents[i]);
  }
  for (std::size_t i = 0; i < data.gamma; ++i)
    if (products[i].monic() != data.invariant_factors[i]) return "prime profiles do not rebuild h_" + std::to_string(i + 1);
  return std::nullopt;
}

inline CaseResult form_roundtrip(Pcg32& rng, const SmithOptions&) {
  RingPtr r = ring(static_cast<std::size_t>(rng.range(2, 4)));
  DeterminantForm form = sample_form(r, rng);
  Polynomial d = form.expand();
  auto got = recognize_determinant_form(d);
  if (!got) return "sampled form not recognized: " + str(d);
  if (got->expand() != d) return "recognized form does not re-expand: " + str(d);
  return std::nullopt;
}

inline bool same_verdict(const Verdict& a, const Verdict& b) {
  if (a.kind != b.kind || a.k != b.k) return false;
  if (a.kind == VerdictKind::Equivalent) return a.smith->snf == b.smith->snf;
  return true;
}

inline GroundTruthInstance random_instance(Pcg32& rng, std::size_t max_n = 3) {
  GenSpec spec = small_spec(rng, max_n, 2);
  if (rng.chance(1, 2)) return gen_equivalent_instance(spec);
  spec.l = spec.m = 2;
  return gen_negative_instance(spec, {Padding::None, 0, rng.chance(1, 2)});
}

inline CaseResult verdict_invariance(Pcg32& rng, const SmithOptions& opts) {
  auto inst = random_instance(rng);
  const auto& r = inst.f.ring();
  Verdict a = decide_equivalence(inst.f, opts);
  PolyMatrix g = random_unimodular(r, rng, inst.f.rows(), 2, 1).matrix * inst.f *
                 random_unimodular(r, rng, inst.f.cols(), 2, 1).matrix;
  Verdict b = decide_equivalence(g, opts);
  for (const auto* v : {&a, &b})
    if (v->smith)
      if (auto why = chain_violation(*v->smith); !why.empty()) return why;
  if (!same_verdict(a, b)) return std::string("verdict changed under equivalence: ") + to_string(a.kind) + " vs " + to_string(b.kind);
  return std::nullopt;
}

// --- automorphism ---------------------------------------------------------

inline CaseResult aut_homomorphism(Pcg32& rng, const SmithOptions&) {
  RingPtr r = ring(3);
  TameAut psi = random_tame(r, rng, 3);
  auto f = random_poly(r, rng, {3, 2, 3}), g = random_poly(r, rng, {3, 2, 3});
  if (psi.apply(f * g) != psi.apply(f) * psi.apply(g)) return "psi(fg) != psi(f) psi(g)";
  if (psi.apply(f + g) != psi.apply(f) + psi.apply(g)) return "psi(f + g) != psi(f) + psi(g)";
  return std::nullopt;
}

inline CaseResult aut_group_laws(Pcg32& rng, const SmithOptions&) {
  RingPtr r = ring(3);
  TameAut a = random_tame(r, rng, 2), b = random_tame(r, rng, 2), c = random_tame(r, rng, 2);
  if (compose(compose(a, b), c).images() != compose(a, compose(b, c)).images()) return "composition not associative";
  TameAut ai = invert(a);
  for (std::size_t v = 0; v < 3; ++v) {
    Polynomial x = Polynomial::variable(r, v);
    if (ai.apply(a.apply(x)) != x || a.apply(ai.apply(x)) != x) return "invert is not a two-sided inverse";
    if (compose(a, b).apply(x) != a.apply(b.apply(x))) return "compose does not match sequential application";
  }
  return std::nullopt;
}

inline CaseResult aut_verdict_invariance(Pcg32& rng, const SmithOptions& opts) {
  auto inst = random_instance(rng, 3);
  TameAut psi = random_tame(inst.f.ring(), rng, 3);
  PolyMatrix g = psi.apply(inst.f);
  Verdict a = decide_equivalence(inst.f, opts);
  Verdict b = decide_with_automorphism(g, psi, opts);
  if (a.kind != b.kind || a.k != b.k)
    return std::string("verdict changed under automorphism: ") + to_string(a.kind) + " vs " + to_string(b.kind);
  if (a.kind == VerdictKind::Equivalent) {
    auto direct = smith_normal_form(g, opts);
    if (auto why = chain_violation(direct); !why.empty()) return why;
    if (direct.invariant_factors != b.smith->invariant_factors) return "reported SNF differs from the SNF of psi(F)";
  }
  return std::nullopt;
}

// --- harness --------------------------------------------------------------

inline CaseResult determinism(Pcg32& rng, const SmithOptions&) {
  GenSpec spec = small_spec(rng);
  auto a = gen_equivalent_instance(spec), b = gen_equivalent_instance(spec);
  if (!(a.f == b.f) || !(a.s == b.s)) return "equivalent instance not reproducible";
  auto c = gen_negative_instance(spec), d = gen_negative_instance(spec);
  if (!(c.f == d.f)) return "negative instance not reproducible";
  if (!(gen_unimodular(spec) == gen_unimodular(spec))) return "unimodular not reproducible";
  return std::nullopt;
}

inline CaseResult unimodular_generator(Pcg32& rng, const SmithOptions&) {
  RingPtr r = rng.chance(1, 3) ? ring(3, 5) : ring(3);
  auto size = static_cast<std::size_t>(rng.range(1, 4));
  auto sample = random_unimodular(r, rng, size, static_cast<std::size_t>(rng.range(0, 5)), 2);
  Polynomial det = determinant(sample.matrix);
  if (det != Polynomial::constant(r, sample.determinant)) return "det(U) = " + str(det) + " differs from tracked unit";
  return std::nullopt;
}

inline CaseResult equivalent_recognized(Pcg32& rng, const SmithOptions& opts) {
  auto inst = gen_equivalent_instance(small_spec(rng));
  auto data = smith_normal_form(inst.f, opts);
  if (auto why = chain_violation(data); !why.empty()) return why + " for F = " + str(inst.f);
  if (!recognize_determinant_form(data.divisors.back())) return "d_gamma not recognized for F = " + str(inst.f);
  for (std::size_t i = 0; i < data.gamma; ++i)
    if (data.invariant_factors[i] != inst.s(i, i).monic()) return "SNF differs from the recipe for F = " + str(inst.f);
  return std::nullopt;
}

inline CaseResult expected_verdict(Pcg32& rng, const SmithOptions& opts) {
  auto inst = random_instance(rng);
  Verdict v = decide_equivalence(inst.f, opts);
  if (v.kind != inst.expected) return std::string("expected ") + to_string(inst.expected) + ", got " + to_string(v.kind);
  if (v.kind == VerdictKind::NotEquivalent && v.k != inst.expected_k) return "wrong witness order";
  return std::nullopt;
}

}  // namespace props

/// Every property with its default case count, sorted by name.
inline std::vector<Property> all_properties() {
  using namespace props;
  std::vector<Property> out{
      {"algebra.factor_roundtrip", 100, factor_roundtrip},
      {"algebra.gcd_divides", 200, gcd_divides},
      {"algebra.ring_axioms", 1000, ring_axioms},
      {"algebra.substitute_homomorphism", 200, substitute_homomorphism},
      {"automorphism.group_laws", 50, aut_group_laws},
      {"automorphism.homomorphism", 200, aut_homomorphism},
      {"automorphism.verdict_invariance", 50, aut_verdict_invariance},
      {"groebner.generators_reduce", 100, generators_reduce},
      {"groebner.multivariate_unit_oracle", 100, multivariate_unit_oracle},
      {"groebner.order_canonical", 50, order_canonical},
      {"groebner.univariate_unit_oracle", 200, univariate_unit_oracle},
      {"harness.determinism", 20, determinism},
      {"harness.equivalent_recognized", 50, equivalent_recognized},
      {"harness.expected_verdict", 100, expected_verdict},
      {"harness.unimodular_generator", 100, unimodular_generator},
      {"polymatrix.cauchy_binet", 500, cauchy_binet},
      {"polymatrix.det_multiplicative", 200, det_multiplicative},
      {"polymatrix.equivalence_invariance", 100, equivalence_invariance},
      {"polymatrix.rank_mod_bounds", 100, rank_mod_bounds},
      {"smith.coprime_multiplicativity", 100, coprime_multiplicativity},
      {"smith.divisor_chain", 100, divisor_chain},
      {"smith.form_roundtrip", 200, form_roundtrip},
      {"smith.per_prime", 50, per_prime},
      {"smith.reduced_minor_identity", 100, reduced_minor_identity},
      {"smith.snf_unit_ideals", 100, snf_unit_ideals},
      {"smith.verdict_invariance", 100, verdict_invariance},
  };
  return out;
}

}  // namespace polysnf::harness
