#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polysnf/algebra/polynomial.hpp"
#include "polysnf/error.hpp"

namespace polysnf {

struct GroebnerOptions {
  /// Pending S-pair count above which Buchberger gives up with PairLimitExceeded.
  std::size_t pair_cap = 10000;
};

namespace detail {

inline const Polynomial* find_reducer(const Monomial& m, std::span<const Polynomial> basis) {
  for (const auto& g : basis)
    if (!g.is_zero() && g.leading_monomial().divides(m)) return &g;
  return nullptr;
}

}  // namespace detail

/// Fully reduced remainder of f on division by basis.
inline Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
  if (basis.empty()) throw InvalidArgument("normal_form needs a nonempty basis");
  for (const auto& g : basis)
    if (!same_ring(g.ring(), f.ring())) throw AmbientMismatch();
  const Field& field = f.field();
  Polynomial p = f;
  std::vector<Term> remainder;
  while (!p.is_zero()) {
    const Term lt = p.leading_term();
    if (const Polynomial* g = detail::find_reducer(lt.monomial, basis)) {
      Monomial m = lt.monomial / g->leading_monomial();
      Rational c = field.div(lt.coeff, g->leading_coeff());
      p = p - g->mul_term(m, c);
    } else {
      remainder.push_back(lt);
      p = p.tail();
    }
  }
  return Polynomial::from_terms(f.ring(), std::move(remainder));
}

inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  return normal_form(f, std::span<const Polynomial>(basis));
}

namespace detail {

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Field& field = f.field();
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.mul_term(l / f.leading_monomial(), field.inv(f.leading_coeff()));
  Polynomial b = g.mul_term(l / g.leading_monomial(), field.inv(g.leading_coeff()));
  return a - b;
}

/// Minimal, inter-reduced, monic, sorted ascending by leading monomial.
inline std::vector<Polynomial> reduce_basis(std::vector<Polynomial> g) {
  std::sort(g.begin(), g.end(), [](const Polynomial& a, const Polynomial& b) {
    return grevlex(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = g[i].leading_monomial();
      const auto& lj = g[j].leading_monomial();
      if (lj.divides(li) && (!(lj == li) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial r = others.empty() ? minimal[i] : normal_form(minimal[i], others);
    reduced.push_back(r.monic());
  }
  std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
    return grevlex(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return reduced;
}

}  // namespace detail

/// Reduced Groebner basis under grevlex (x1 < ... < xn).
///
/// Buchberger's algorithm with the normal selection strategy and the product
/// criterion. A nonzero constant anywhere short-circuits to {1}.
inline std::vector<Polynomial> groebner_basis(std::span<const Polynomial> generators,
                                              const GroebnerOptions& options = {}) {
  if (generators.empty()) throw InvalidArgument("ideal needs at least one generator");
  const RingPtr& ring = generators.front().ring();
  std::vector<Polynomial> basis;
  for (const auto& g : generators) {
    if (!same_ring(g.ring(), ring)) throw AmbientMismatch();
    if (g.is_zero()) continue;
    if (g.is_nonzero_constant()) return {Polynomial::one(ring)};
    basis.push_back(g.monic());
  }
  if (basis.empty()) throw InvalidArgument("ideal generators are all zero");

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  auto add_pairs_for = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      const auto& a = basis[i].leading_monomial();
      const auto& b = basis[k].leading_monomial();
      if (coprime(a, b)) continue;
      pairs.push_back({i, k, lcm(a, b)});
    }
    if (pairs.size() > options.pair_cap)
      throw PairLimitExceeded("S-pair queue exceeded cap of " + std::to_string(options.pair_cap));
  };
  for (std::size_t k = 1; k < basis.size(); ++k) add_pairs_for(k);

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      auto c = grevlex(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return a.j != b.j ? a.j < b.j : a.i < b.i;
    });
    Pair pr = *best;
    pairs.erase(best);
    Polynomial r = normal_form(detail::s_polynomial(basis[pr.i], basis[pr.j]), basis);
    if (r.is_zero()) continue;
    if (r.is_nonzero_constant()) return {Polynomial::one(ring)};
    basis.push_back(r.monic());
    add_pairs_for(basis.size() - 1);
  }
  return detail::reduce_basis(std::move(basis));
}

inline std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& generators,
                                              const GroebnerOptions& options = {}) {
  return groebner_basis(std::span<const Polynomial>(generators), options);
}

/// Ideal given by generators, with its reduced Groebner basis computed on first use.
class Ideal {
 public:
  explicit Ideal(std::vector<Polynomial> generators)
      : generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
    if (generators_.empty()) throw InvalidArgument("ideal needs at least one generator");
    for (const auto& g : generators_)
      if (!same_ring(g.ring(), generators_.front().ring())) throw AmbientMismatch();
  }

  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  const RingPtr& ring() const { return generators_.front().ring(); }

  const std::vector<Polynomial>& basis(const GroebnerOptions& options = {}) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (!cache_->basis) cache_->basis = groebner_basis(generators_, options);
    return *cache_->basis;
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::optional<std::vector<Polynomial>> basis;
  };
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

/// I = R, i.e. the variety of I is empty over the algebraic closure.
inline bool is_unit_ideal(const Ideal& ideal, const GroebnerOptions& options = {}) {
  const auto& b = ideal.basis(options);
  return b.size() == 1 && b.front().is_one();
}

inline bool ideal_membership(const Polynomial& f, const Ideal& ideal, const GroebnerOptions& options = {}) {
  if (!same_ring(f.ring(), ideal.ring())) throw AmbientMismatch();
  return normal_form(f, ideal.basis(options)).is_zero();
}

}  // namespace polysnf
