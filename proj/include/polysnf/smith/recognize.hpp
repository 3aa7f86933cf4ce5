#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polysnf/algebra/polynomial.hpp"
#include "polysnf/error.hpp"

namespace polysnf {

struct LinearFactor {
  /// 0-based index of x_i (at least 1).
  std::size_t var = 0;
  /// f_i, involving only x_1 .. x_{i-1}.
  Polynomial f;
  unsigned t = 0;

  Polynomial phi() const { return Polynomial::variable(f.ring(), var) - f; }
};

/// unit * f1 * prod (x_i - f_i)^{t_i} with f1 monic in K[x1].
struct DeterminantForm {
  Rational unit;
  Polynomial f1;
  /// Ascending in var, at most one entry per variable.
  std::vector<LinearFactor> factors;

  Polynomial expand() const {
    Polynomial out = f1.scaled(unit);
    for (const auto& fac : factors) out = out * fac.phi().pow(fac.t);
    return out;
  }
};

/// Recognize d = unit * f1(x1) * prod_{i>=2} (x_i - f_i(x_1..x_{i-1}))^{t_i}.
///
/// Peels the highest variable first: with t = deg_{x_i}(d) and c_k the
/// coefficient of x_i^k, the only candidate is f_i = -c_{t-1} / (t c_t).
/// Every step is verified by exact division. Returns nullopt if d is not of
/// this form, or if t is divisible by the characteristic.
inline std::optional<DeterminantForm> recognize_determinant_form(const Polynomial& d) {
  if (d.is_zero()) throw InvalidArgument("cannot recognize the zero polynomial");
  const Field& field = d.field();
  const std::size_t n = d.num_vars();
  Polynomial g = d;
  std::vector<LinearFactor> factors;
  for (std::size_t i = n; i-- > 1;) {
    long t = g.degree_in(i);
    if (t <= 0) continue;
    Rational tt = field.from_int(t);
    if (tt == 0) return std::nullopt;
    Polynomial ct = g.coefficient_in(i, static_cast<Monomial::Exponent>(t));
    Polynomial ct1 = g.coefficient_in(i, static_cast<Monomial::Exponent>(t - 1));
    auto ratio = try_divide(ct1, ct.scaled(tt));
    if (!ratio) return std::nullopt;
    LinearFactor fac{i, -*ratio, static_cast<unsigned>(t)};
    for (std::size_t v = i; v < n; ++v)
      if (fac.f.involves(v)) return std::nullopt;
    auto rest = try_divide(g, fac.phi().pow(fac.t));
    if (!rest) return std::nullopt;
    g = std::move(*rest);
    factors.push_back(std::move(fac));
  }
  if (!g.is_univariate_in(0)) return std::nullopt;
  DeterminantForm form{g.leading_coeff(), g.monic(), {}};
  form.factors.assign(factors.rbegin(), factors.rend());
  return form;
}

}  // namespace polysnf
