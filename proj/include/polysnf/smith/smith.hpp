#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "polysnf/algebra/gcd.hpp"
#include "polysnf/error.hpp"
#include "polysnf/groebner/groebner.hpp"
#include "polysnf/polymatrix/minors.hpp"

namespace polysnf {

using GcdFunction = std::function<Polynomial(const Polynomial&, const Polynomial&)>;

struct SmithOptions {
  MinorOptions minors;
  GroebnerOptions groebner;
  /// Binary gcd used for determinantal divisors. Replaceable so that test
  /// harnesses can inject a faulty implementation.
  GcdFunction gcd = [](const Polynomial& a, const Polynomial& b) { return gcd_multivariate(a, b); };
};

struct SmithData {
  std::size_t gamma = 0;
  /// d_0 .. d_gamma, each monic; d_0 = 1.
  std::vector<Polynomial> divisors;
  /// h_1 .. h_gamma with h_i = d_i / d_{i-1}.
  std::vector<Polynomial> invariant_factors;
  /// diag(h_1, .., h_gamma) padded with zeros to the input shape.
  PolyMatrix snf;
  /// det(F) / d_gamma for square full-rank input.
  std::optional<Rational> determinant_unit;
};

struct ReducedMinorReport {
  std::size_t k = 0;
  Polynomial divisor;
  /// b_j = a_j / d_k in the order of all_k_minors.
  std::vector<Polynomial> generators;
  bool is_unit = false;
};

namespace detail {

/// Monic gcd of the nonzero entries, folded with the supplied binary gcd.
inline Polynomial fold_gcd(const std::vector<Polynomial>& values, const GcdFunction& gcd) {
  std::optional<Polynomial> g;
  for (const auto& v : values) {
    if (v.is_zero()) continue;
    g = g ? gcd(*g, v).monic() : v.monic();
    if (g->is_one()) break;
  }
  if (!g) throw InvalidArgument("all minors vanish");
  return *g;
}

/// Assemble SmithData from the monic divisor chain d_0..d_gamma.
inline SmithData assemble(const PolyMatrix& f, std::vector<Polynomial> divisors) {
  SmithData out;
  out.gamma = divisors.size() - 1;
  for (std::size_t i = 1; i < divisors.size(); ++i)
    out.invariant_factors.push_back(divide_exact(divisors[i], divisors[i - 1]));
  out.divisors = std::move(divisors);
  out.snf = PolyMatrix::diagonal(f.ring(), f.rows(), f.cols(), out.invariant_factors);
  if (f.is_square() && out.gamma == f.rows() && out.gamma > 0)
    out.determinant_unit = determinant(f).leading_coeff();
  return out;
}

}  // namespace detail

/// d_k(F): monic gcd of all k x k minors. Requires 1 <= k <= rank.
inline Polynomial determinantal_divisor(const PolyMatrix& f, std::size_t k, const SmithOptions& options = {}) {
  return detail::fold_gcd(all_k_minors(f, k, options.minors), options.gcd);
}

/// Determinantal divisors, invariant factors and the Smith normal form.
inline SmithData determinantal_divisors(const PolyMatrix& f, const SmithOptions& options = {}) {
  const std::size_t gamma = rank(f);
  std::vector<Polynomial> d{Polynomial::one(f.ring())};
  for (std::size_t k = 1; k <= gamma; ++k) d.push_back(determinantal_divisor(f, k, options));
  return detail::assemble(f, std::move(d));
}

/// Same data as determinantal_divisors; the SNF is canonical but no unimodular
/// transformation realizing it is produced.
inline SmithData smith_normal_form(const PolyMatrix& f, const SmithOptions& options = {}) {
  return determinantal_divisors(f, options);
}

namespace detail {

inline ReducedMinorReport reduce_minors(std::size_t k, std::vector<Polynomial> minors, const Polynomial& dk,
                                        const GroebnerOptions& gb) {
  ReducedMinorReport report;
  report.k = k;
  report.divisor = dk;
  report.generators.reserve(minors.size());
  for (auto& m : minors) report.generators.push_back(divide_exact(m, dk));
  report.is_unit = is_unit_ideal(Ideal(report.generators), gb);
  return report;
}

}  // namespace detail

/// J_k(F): the k x k minors with d_k divided out, and whether they generate R.
inline ReducedMinorReport reduced_minor_ideal(const PolyMatrix& f, std::size_t k, const SmithOptions& options = {}) {
  if (k < 1 || k > std::min(f.rows(), f.cols()))
    throw InvalidArgument("reduced minors need 1 <= k <= min(rows, cols)");
  auto minors = all_k_minors(f, k, options.minors);
  bool any = false;
  for (const auto& m : minors) any = any || !m.is_zero();
  if (!any) throw InvalidArgument("reduced minors of order " + std::to_string(k) + " exceed the rank");
  Polynomial dk = detail::fold_gcd(minors, options.gcd);
  return detail::reduce_minors(k, std::move(minors), dk, options.groebner);
}

}  // namespace polysnf
