#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "polysnf/algebra/polynomial.hpp"
#include "polysnf/error.hpp"

namespace polysnf {

/// Dense rows x cols matrix over a polynomial ring. Indices are 0-based.
class PolyMatrix {
 public:
  PolyMatrix() = default;

  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring_)) {}

  static PolyMatrix identity(const RingPtr& ring, std::size_t n) {
    PolyMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Polynomial::one(ring);
    return m;
  }

  static PolyMatrix diagonal(const RingPtr& ring, std::size_t rows, std::size_t cols,
                             const std::vector<Polynomial>& diag) {
    if (diag.size() > std::min(rows, cols)) throw InvalidArgument("diagonal longer than matrix");
    PolyMatrix m(ring, rows, cols);
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
  }

  static PolyMatrix from_rows(const RingPtr& ring, const std::vector<std::vector<Polynomial>>& rows) {
    if (rows.empty() || rows.front().empty()) throw InvalidArgument("matrix must be nonempty");
    PolyMatrix m(ring, rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw InvalidArgument("matrix rows have different lengths");
      for (std::size_t j = 0; j < m.cols_; ++j) {
        if (!same_ring(rows[i][j].ring(), ring)) throw AmbientMismatch();
        m(i, j) = rows[i][j];
      }
    }
    return m;
  }

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Polynomial& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  const Polynomial& at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw InvalidArgument("matrix index out of range");
    return (*this)(i, j);
  }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  PolyMatrix transpose() const {
    PolyMatrix t(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  PolyMatrix submatrix(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const {
    PolyMatrix s(ring_, row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
      for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = at(row_idx[i], col_idx[j]);
    return s;
  }

  PolyMatrix map(const std::function<Polynomial(const Polynomial&)>& fn) const {
    PolyMatrix out(ring_, rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = fn(entries_[k]);
    return out;
  }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (!same_ring(a.ring_, b.ring_)) throw AmbientMismatch();
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix product shape mismatch");
    PolyMatrix c(a.ring_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) {
        Polynomial s(a.ring_);
        for (std::size_t k = 0; k < a.cols_; ++k)
          if (!a(i, k).is_zero() && !b(k, j).is_zero()) s += a(i, k) * b(k, j);
        c(i, j) = std::move(s);
      }
    return c;
  }

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  RingPtr ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> entries_;
};

}  // namespace polysnf
