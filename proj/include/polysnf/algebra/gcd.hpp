#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "polysnf/algebra/polynomial.hpp"
#include "polysnf/algebra/univariate.hpp"
#include "polysnf/error.hpp"

namespace polysnf {

Polynomial gcd_multivariate(const Polynomial& a, const Polynomial& b);

namespace detail {

/// Pseudo-remainder of a by b viewed in R'[v]: lc_v(b)^(deg a - deg b + 1) * a mod b.
inline Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t v) {
  const long db = b.degree_in(v);
  const Polynomial lcb = b.leading_coeff_in(v);
  Polynomial r = a;
  long e = a.degree_in(v) - db + 1;
  while (!r.is_zero() && r.degree_in(v) >= db) {
    const long dr = r.degree_in(v);
    Polynomial lcr = r.leading_coeff_in(v);
    Monomial shift = Monomial::variable(r.num_vars(), v, static_cast<Monomial::Exponent>(dr - db));
    Polynomial scaled_b = (lcr * b);
    r = lcb * r - scaled_b.mul_term(shift, Rational(1));
    --e;
  }
  if (e > 0) r = lcb.pow(static_cast<unsigned>(e)) * r;
  return r;
}

/// gcd of the coefficients of f viewed as a polynomial in v.
inline Polynomial content_in(const Polynomial& f, std::size_t v) {
  const RingPtr& ring = f.ring();
  long d = f.degree_in(v);
  Polynomial c(ring);
  for (long k = d; k >= 0; --k) {
    Polynomial coeff = f.coefficient_in(v, static_cast<Monomial::Exponent>(k));
    if (coeff.is_zero()) continue;
    c = c.is_zero() ? coeff.monic() : gcd_multivariate(c, coeff);
    if (c.is_nonzero_constant()) return Polynomial::one(ring);
  }
  return c;
}

inline Polynomial primitive_part_in(const Polynomial& f, std::size_t v) {
  if (f.is_zero()) return f;
  return divide_exact(f, content_in(f, v));
}

/// Subresultant PRS gcd of two polynomials that are primitive in v and of
/// positive degree in v.
inline Polynomial primitive_gcd_in(Polynomial a, Polynomial b, std::size_t v) {
  const RingPtr& ring = a.ring();
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  Polynomial g = Polynomial::one(ring);
  Polynomial h = Polynomial::one(ring);
  for (;;) {
    const long delta = a.degree_in(v) - b.degree_in(v);
    Polynomial r = pseudo_remainder(a, b, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) return Polynomial::one(ring);
    a = std::move(b);
    b = divide_exact(r, g * h.pow(static_cast<unsigned>(delta)));
    g = a.leading_coeff_in(v);
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = divide_exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
  return primitive_part_in(b, v);
}

}  // namespace detail

/// Greatest common divisor, normalized to have grevlex-leading coefficient 1.
///
/// Recursive content / primitive-part reduction on the highest variable, with
/// a subresultant remainder sequence for the primitive parts.
inline Polynomial gcd_multivariate(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring())) throw AmbientMismatch();
  if (a.is_zero() && b.is_zero()) throw InvalidArgument("gcd of two zero polynomials");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  const RingPtr& ring = a.ring();
  if (a.is_constant() || b.is_constant()) return Polynomial::one(ring);

  const std::size_t v = std::max(*a.max_var(), *b.max_var());
  if (!a.involves(v)) return gcd_multivariate(a, detail::content_in(b, v));
  if (!b.involves(v)) return gcd_multivariate(detail::content_in(a, v), b);

  if (a.is_univariate_in(v) && b.is_univariate_in(v)) {
    const Field& f = a.field();
    return dense::to_polynomial(ring, dense::gcd(f, dense::from_polynomial(a, v), dense::from_polynomial(b, v)), v);
  }

  Polynomial ca = detail::content_in(a, v);
  Polynomial cb = detail::content_in(b, v);
  Polynomial c = gcd_multivariate(ca, cb);
  Polynomial pa = divide_exact(a, ca);
  Polynomial pb = divide_exact(b, cb);
  return (c * detail::primitive_gcd_in(pa, pb, v)).monic();
}

inline Polynomial gcd(const Polynomial& a, const Polynomial& b) { return gcd_multivariate(a, b); }

/// Normalized gcd of a list; zero entries are skipped. Throws if all are zero.
inline Polynomial gcd_all(const std::vector<Polynomial>& values) {
  Polynomial g;
  bool have = false;
  for (const auto& v : values) {
    if (v.is_zero()) continue;
    g = have ? gcd_multivariate(g, v) : v.monic();
    have = true;
    if (g.is_one()) break;
  }
  if (!have) throw InvalidArgument("gcd of an all-zero list");
  return g;
}

}  // namespace polysnf
