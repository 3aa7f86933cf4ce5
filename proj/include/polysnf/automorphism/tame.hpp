#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <variant>
#include <vector>

#include "polysnf/algebra/polynomial.hpp"
#include "polysnf/error.hpp"
#include "polysnf/polymatrix/poly_matrix.hpp"

namespace polysnf {

/// x_i -> sum_j A[i][j] x_j + c[i].
struct AffineStep {
  std::vector<std::vector<Rational>> matrix;
  std::vector<Rational> shift;
};

/// x_1 -> a_1 x_1 + b_1,  x_j -> a_j x_j + q_j(x_1..x_{j-1}).
/// q[0] is unused and kept zero.
struct TriangularStep {
  std::vector<Rational> scale;
  Rational b1;
  std::vector<Polynomial> q;
};

using TameStep = std::variant<AffineStep, TriangularStep>;

namespace detail {

/// Inverse over Q by Gauss-Jordan; nullopt when singular.
inline std::optional<std::vector<std::vector<Rational>>> invert_matrix(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    Rational s = 1 / a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] *= s;
      inv[c][j] *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

inline void validate(const RingPtr& ring, const TameStep& step) {
  const std::size_t n = ring->num_vars();
  if (const auto* aff = std::get_if<AffineStep>(&step)) {
    if (aff->matrix.size() != n || aff->shift.size() != n) throw InvalidAutomorphism("affine step has wrong size");
    for (const auto& row : aff->matrix)
      if (row.size() != n) throw InvalidAutomorphism("affine matrix is not square");
    if (!invert_matrix(aff->matrix)) throw InvalidAutomorphism("affine matrix is singular");
    return;
  }
  const auto& tri = std::get<TriangularStep>(step);
  if (tri.scale.size() != n || tri.q.size() != n) throw InvalidAutomorphism("triangular step has wrong size");
  for (const auto& a : tri.scale)
    if (a == 0) throw InvalidAutomorphism("triangular scale factors must be nonzero");
  for (std::size_t j = 0; j < n; ++j) {
    if (!same_ring(tri.q[j].ring(), ring)) throw AmbientMismatch();
    for (std::size_t v = j; v < n; ++v)
      if (tri.q[j].involves(v)) throw InvalidAutomorphism("q_j may only involve earlier variables");
  }
}

inline std::vector<Polynomial> step_images(const RingPtr& ring, const TameStep& step) {
  const std::size_t n = ring->num_vars();
  std::vector<Polynomial> out;
  if (const auto* aff = std::get_if<AffineStep>(&step)) {
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial g = Polynomial::constant(ring, aff->shift[i]);
      for (std::size_t j = 0; j < n; ++j)
        if (aff->matrix[i][j] != 0) g += Polynomial::variable(ring, j).scaled(aff->matrix[i][j]);
      out.push_back(std::move(g));
    }
    return out;
  }
  const auto& tri = std::get<TriangularStep>(step);
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial g = Polynomial::variable(ring, j).scaled(tri.scale[j]);
    g += j == 0 ? Polynomial::constant(ring, tri.b1) : tri.q[j];
    out.push_back(std::move(g));
  }
  return out;
}

inline TameStep invert_step(const RingPtr& ring, const TameStep& step) {
  const std::size_t n = ring->num_vars();
  if (const auto* aff = std::get_if<AffineStep>(&step)) {
    auto inv = invert_matrix(aff->matrix);
    if (!inv) throw InvalidAutomorphism("affine matrix is singular");
    AffineStep out{*inv, std::vector<Rational>(n, Rational(0))};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.shift[i] -= (*inv)[i][j] * aff->shift[j];
    return out;
  }
  // x_j -> (x_j - q_j(images of x_1..x_{j-1})) / a_j, solved in increasing j.
  const auto& tri = std::get<TriangularStep>(step);
  TriangularStep out{std::vector<Rational>(n), -tri.b1 / tri.scale[0], std::vector<Polynomial>(n, Polynomial(ring))};
  std::vector<std::optional<Polynomial>> inv_images(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.scale[j] = 1 / tri.scale[j];
    Polynomial rest = j == 0 ? Polynomial::constant(ring, tri.b1) : substitute(tri.q[j], inv_images);
    if (j > 0) out.q[j] = (-rest).scaled(out.scale[j]);
    inv_images[j] = (Polynomial::variable(ring, j) - rest).scaled(out.scale[j]);
  }
  return out;
}

}  // namespace detail

/// Tame automorphism of Q[x1..xn] stored as a sequence of elementary steps.
///
/// The steps act as ring maps, outermost first:
///   apply(psi, f) = s_0(s_1(... s_{k-1}(f))).
/// The images psi(x_i) are computed on first use and cached.
class TameAut {
 public:
  explicit TameAut(RingPtr ring, std::vector<TameStep> steps = {})
      : ring_(std::move(ring)), steps_(std::move(steps)), cache_(std::make_shared<Cache>()) {
    if (!ring_->field().is_rationals())
      throw InvalidAutomorphism("tame automorphisms are supported over Q only");
    for (const auto& s : steps_) detail::validate(ring_, s);
  }

  static TameAut identity(const RingPtr& ring) { return TameAut(ring); }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<TameStep>& steps() const noexcept { return steps_; }

  /// psi(x_1), .., psi(x_n).
  const std::vector<Polynomial>& images() const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (!cache_->images) {
      const std::size_t n = ring_->num_vars();
      std::vector<Polynomial> img;
      for (std::size_t i = 0; i < n; ++i) img.push_back(Polynomial::variable(ring_, i));
      for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
        auto s = detail::step_images(ring_, *it);
        for (auto& g : img) g = substitute_all(g, s);
      }
      cache_->images = std::move(img);
    }
    return *cache_->images;
  }

  Polynomial apply(const Polynomial& f) const {
    if (!same_ring(f.ring(), ring_)) throw AmbientMismatch();
    return substitute_all(f, images());
  }

  PolyMatrix apply(const PolyMatrix& m) const {
    if (!same_ring(m.ring(), ring_)) throw AmbientMismatch();
    const auto& img = images();
    return m.map([&](const Polynomial& e) { return substitute_all(e, img); });
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::optional<std::vector<Polynomial>> images;
  };
  RingPtr ring_;
  std::vector<TameStep> steps_;
  std::shared_ptr<Cache> cache_;
};

inline Polynomial apply(const TameAut& psi, const Polynomial& f) { return psi.apply(f); }
inline PolyMatrix apply(const TameAut& psi, const PolyMatrix& m) { return psi.apply(m); }

/// apply(compose(psi, phi), f) = apply(psi, apply(phi, f)).
inline TameAut compose(const TameAut& psi, const TameAut& phi) {
  if (!same_ring(psi.ring(), phi.ring())) throw AmbientMismatch();
  std::vector<TameStep> steps = psi.steps();
  steps.insert(steps.end(), phi.steps().begin(), phi.steps().end());
  return TameAut(psi.ring(), std::move(steps));
}

inline TameAut invert(const TameAut& psi) {
  std::vector<TameStep> steps;
  for (auto it = psi.steps().rbegin(); it != psi.steps().rend(); ++it)
    steps.push_back(detail::invert_step(psi.ring(), *it));
  return TameAut(psi.ring(), std::move(steps));
}

/// The map of Q[x1,x2,x3]
///   x1 -> 2x1 + x2,  x2 -> 2x2 + x3,
///   x3 -> -4x1^2 + x2^2 + a x1 + b x2 + (c + 2x1 + x2) x3
/// written as an affine map, a scaling of x3 by (a - 2b + 4c)/4 and a
/// triangular map x3 -> x3 + q3(x1, x2).
inline TameAut build_frost_storey_psi(const RingPtr& ring, const Rational& a, const Rational& b, const Rational& c) {
  if (ring->num_vars() != 3 || !ring->field().is_rationals())
    throw InvalidArgument("the construction lives in Q[x1, x2, x3]");
  const Rational delta = a - 2 * b + 4 * c;
  if (delta == 0) throw DeltaZero();
  using Row = std::vector<Rational>;
  const Rational z(0), one(1);
  AffineStep first{{Row{2, 1, 0}, Row{0, 2, 1}, Row{0, 0, 1}}, Row(3, z)};
  AffineStep scale{{Row{one, z, z}, Row{z, one, z}, Row{z, z, delta / 4}}, Row(3, z)};
  const Polynomial u1 = Polynomial::variable(ring, 0), u2 = Polynomial::variable(ring, 1);
  Polynomial q3 = -(u1 * u1) + u1 * u2 + u1.scaled(a / 2) + u2.scaled((2 * b - a) / 4);
  TriangularStep last{Row(3, one), z, {Polynomial(ring), Polynomial(ring), q3}};
  return TameAut(ring, {first, scale, last});
}

}  // namespace polysnf
