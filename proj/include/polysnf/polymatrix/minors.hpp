#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "polysnf/error.hpp"
#include "polysnf/groebner/groebner.hpp"
#include "polysnf/polymatrix/elimination.hpp"
#include "polysnf/polymatrix/poly_matrix.hpp"

namespace polysnf {

/// Strictly increasing 0-based row or column indices.
using IndexSet = std::vector<std::size_t>;

struct MinorOptions {
  /// Largest min(rows, cols) for which minors are enumerated.
  std::size_t dimension_cap = 8;
};

/// All k-subsets of {0..n-1} in lexicographic order.
inline std::vector<IndexSet> combinations(std::size_t n, std::size_t k) {
  std::vector<IndexSet> out;
  if (k > n) return out;
  IndexSet idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Every k x k minor, ordered lexicographically by (row set, column set).
inline std::vector<Polynomial> all_k_minors(const PolyMatrix& a, std::size_t k, const MinorOptions& options = {}) {
  const std::size_t small = std::min(a.rows(), a.cols());
  if (k < 1 || k > small) throw InvalidArgument("minor order " + std::to_string(k) + " out of range");
  if (small > options.dimension_cap)
    throw SizeCapExceeded("minor enumeration needs min(rows, cols) <= " + std::to_string(options.dimension_cap));
  const auto row_sets = combinations(a.rows(), k);
  const auto col_sets = combinations(a.cols(), k);
  std::vector<Polynomial> out;
  out.reserve(row_sets.size() * col_sets.size());
  for (const auto& r : row_sets)
    for (const auto& c : col_sets) out.push_back(determinant(a.submatrix(r, c)));
  return out;
}

/// det(U) is a nonzero constant.
inline bool is_unimodular(const PolyMatrix& u) {
  if (!u.is_square()) throw InvalidArgument("unimodularity needs a square matrix");
  return determinant(u).is_nonzero_constant();
}

/// Rank of A after substituting x_r := f_r entry-wise (r is a 0-based variable
/// index >= 1; f_r may only involve variables before x_r).
inline std::size_t rank_after_substitution(const PolyMatrix& a, std::size_t r, const Polynomial& fr) {
  const std::size_t n = a.ring()->num_vars();
  if (r < 1 || r >= n) throw InvalidArgument("substitution variable must be x2..xn");
  if (!same_ring(fr.ring(), a.ring())) throw AmbientMismatch();
  for (std::size_t v = r; v < n; ++v)
    if (fr.involves(v)) throw InvalidArgument("replacement may only involve earlier variables");
  std::vector<std::optional<Polynomial>> images(n);
  images[r] = fr;
  return rank(a.map([&](const Polynomial& p) { return substitute(p, images); }));
}

/// Zero left prime: full row rank, rows < cols, maximal minors generate R.
inline bool is_zlp(const PolyMatrix& a, const MinorOptions& minor_options = {},
                   const GroebnerOptions& gb_options = {}) {
  if (a.rows() >= a.cols()) throw InvalidArgument("ZLP test needs fewer rows than columns");
  if (rank(a) != a.rows()) throw InvalidArgument("ZLP test needs full row rank");
  auto minors = all_k_minors(a, a.rows(), minor_options);
  return is_unit_ideal(Ideal(std::move(minors)), gb_options);
}

/// Zero right prime: the transpose is zero left prime.
inline bool is_zrp(const PolyMatrix& a, const MinorOptions& minor_options = {},
                   const GroebnerOptions& gb_options = {}) {
  if (a.cols() >= a.rows()) throw InvalidArgument("ZRP test needs fewer columns than rows");
  return is_zlp(a.transpose(), minor_options, gb_options);
}

}  // namespace polysnf
