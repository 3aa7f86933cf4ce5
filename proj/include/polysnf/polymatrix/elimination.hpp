#pragma once

#include <concepts>
#include <cstddef>
#include <utility>
#include <vector>

#include "polysnf/algebra/polynomial.hpp"
#include "polysnf/polymatrix/poly_matrix.hpp"

namespace polysnf {

/// Arithmetic of an integral domain with exact division, as needed by
/// fraction-free elimination.
template <class D>
concept ExactDomain = requires(const D& d, const typename D::Element& a) {
  { d.is_zero(a) } -> std::convertible_to<bool>;
  { d.zero() } -> std::convertible_to<typename D::Element>;
  { d.one() } -> std::convertible_to<typename D::Element>;
  { d.mul(a, a) } -> std::convertible_to<typename D::Element>;
  { d.sub(a, a) } -> std::convertible_to<typename D::Element>;
  { d.neg(a) } -> std::convertible_to<typename D::Element>;
  { d.div_exact(a, a) } -> std::convertible_to<typename D::Element>;
};

struct PolynomialDomain {
  using Element = Polynomial;
  RingPtr ring;

  bool is_zero(const Polynomial& a) const { return a.is_zero(); }
  Polynomial zero() const { return Polynomial(ring); }
  Polynomial one() const { return Polynomial::one(ring); }
  Polynomial mul(const Polynomial& a, const Polynomial& b) const { return a * b; }
  Polynomial sub(const Polynomial& a, const Polynomial& b) const { return a - b; }
  Polynomial neg(const Polynomial& a) const { return -a; }
  Polynomial div_exact(const Polynomial& a, const Polynomial& b) const { return divide_exact(a, b); }
};

template <ExactDomain D>
using DenseMatrix = std::vector<std::vector<typename D::Element>>;

/// Bareiss determinant; the first nonzero entry of a column below the
/// diagonal becomes the pivot.
template <ExactDomain D>
typename D::Element bareiss_determinant(const D& dom, DenseMatrix<D> m) {
  const std::size_t n = m.size();
  if (n == 0) return dom.one();
  bool negate = false;
  typename D::Element prev = dom.one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && dom.is_zero(m[piv][k])) ++piv;
    if (piv == n) return dom.zero();
    if (piv != k) {
      std::swap(m[piv], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto v = dom.sub(dom.mul(m[i][j], m[k][k]), dom.mul(m[i][k], m[k][j]));
        m[i][j] = dom.div_exact(v, prev);
      }
    }
    prev = m[k][k];
  }
  return negate ? dom.neg(m[n - 1][n - 1]) : m[n - 1][n - 1];
}

/// Rank over the fraction field by fraction-free row echelon reduction.
template <ExactDomain D>
std::size_t fraction_free_rank(const D& dom, DenseMatrix<D> m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  typename D::Element prev = dom.one();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && dom.is_zero(m[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        auto v = dom.sub(dom.mul(m[r][c], m[i][j]), dom.mul(m[i][c], m[r][j]));
        m[i][j] = dom.div_exact(v, prev);
      }
      m[i][c] = dom.zero();
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

namespace detail {

inline DenseMatrix<PolynomialDomain> to_dense(const PolyMatrix& a) {
  DenseMatrix<PolynomialDomain> m(a.rows(), std::vector<Polynomial>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
  return m;
}

inline Polynomial cofactor_determinant(const PolyMatrix& a) {
  switch (a.rows()) {
    case 1:
      return a(0, 0);
    case 2:
      return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    default:
      return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
             a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
             a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
  }
}

}  // namespace detail

/// Exact determinant: cofactor expansion up to 3x3, Bareiss beyond.
inline Polynomial determinant(const PolyMatrix& a) {
  if (!a.is_square()) throw InvalidArgument("determinant of a non-square matrix");
  if (a.rows() == 0) return Polynomial::one(a.ring());
  if (a.rows() <= 3) return detail::cofactor_determinant(a);
  return bareiss_determinant(PolynomialDomain{a.ring()}, detail::to_dense(a));
}

/// Rank over the fraction field of the polynomial ring.
inline std::size_t rank(const PolyMatrix& a) {
  return fraction_free_rank(PolynomialDomain{a.ring()}, detail::to_dense(a));
}

}  // namespace polysnf
