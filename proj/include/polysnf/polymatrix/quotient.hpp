#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "polysnf/algebra/factor.hpp"
#include "polysnf/algebra/polynomial.hpp"
#include "polysnf/algebra/univariate.hpp"
#include "polysnf/error.hpp"
#include "polysnf/polymatrix/elimination.hpp"
#include "polysnf/polymatrix/poly_matrix.hpp"

namespace polysnf {

/// phi_p(F): entries over (K[x1]/<p>)[x2..xn], stored as polynomials of the
/// ambient ring whose x1-degree is below deg(p) in every coefficient.
struct QuotientCoeffMatrix {
  Polynomial modulus;
  PolyMatrix entries;
};

namespace detail {

/// Element of (K[x1]/<p>)[x2..xn]: monomials in x2..xn (x1 exponent zero)
/// mapped to nonzero residues, sorted decreasing in grevlex.
using QuotientTerms = std::vector<std::pair<Monomial, dense::UPoly>>;

struct QuotientDomain {
  using Element = QuotientTerms;
  Field field;
  dense::UPoly modulus;
  std::size_t num_vars;

  bool is_zero(const Element& a) const { return a.empty(); }
  Element zero() const { return {}; }
  Element one() const { return {{Monomial(num_vars), dense::UPoly{Rational(1)}}}; }

  Element neg(const Element& a) const {
    Element out = a;
    for (auto& [m, c] : out) c = dense::scale(field, c, field.from_int(-1));
    return out;
  }

  Element sub(const Element& a, const Element& b) const {
    Element out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      int c;
      if (i == a.size()) c = -1;
      else if (j == b.size()) c = 1;
      else {
        auto o = grevlex(a[i].first, b[j].first);
        c = o > 0 ? 1 : (o < 0 ? -1 : 0);
      }
      if (c > 0) {
        out.push_back(a[i++]);
      } else if (c < 0) {
        out.emplace_back(b[j].first, dense::scale(field, b[j].second, field.from_int(-1)));
        ++j;
      } else {
        dense::UPoly v = dense::sub(field, a[i].second, b[j].second);
        if (!v.empty()) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  Element mul(const Element& a, const Element& b) const {
    std::map<Monomial, dense::UPoly, GrevlexLess> acc;
    for (const auto& [ma, ca] : a)
      for (const auto& [mb, cb] : b) {
        auto& slot = acc[ma * mb];
        slot = dense::add(field, slot, dense::mul(field, ca, cb));
      }
    Element out;
    for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
      dense::UPoly r = dense::rem(field, it->second, modulus);
      if (!r.empty()) out.emplace_back(it->first, std::move(r));
    }
    return out;
  }

  dense::UPoly inverse(const dense::UPoly& c) const {
    auto [g, s, t] = dense::xgcd(field, c, modulus);
    if (!dense::is_one(g)) throw DivisionByZero();
    return dense::rem(field, s, modulus);
  }

  Element div_exact(const Element& a, const Element& b) const {
    if (b.empty()) throw DivisionByZero();
    const Monomial& mb = b.front().first;
    dense::UPoly inv_lc = inverse(b.front().second);
    Element r = a;
    Element q;
    while (!r.empty()) {
      const auto& [mr, cr] = r.front();
      if (!mb.divides(mr)) throw NotDivisible();
      Element t{{mr / mb, dense::rem(field, dense::mul(field, cr, inv_lc), modulus)}};
      q = sub(q, neg(t));
      r = sub(r, mul(t, b));
    }
    return q;
  }

  Element from_polynomial(const Polynomial& p) const {
    std::map<Monomial, dense::UPoly, GrevlexLess> acc;
    for (const auto& t : p.terms()) {
      auto e = t.monomial[0];
      auto& slot = acc[t.monomial.with_exponent(0, 0)];
      if (slot.size() <= e) slot.resize(e + 1, Rational(0));
      slot[e] = t.coeff;
    }
    Element out;
    for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
      dense::trim(it->second);
      dense::UPoly r = dense::rem(field, it->second, modulus);
      if (!r.empty()) out.emplace_back(it->first, std::move(r));
    }
    return out;
  }

  Polynomial to_polynomial(const RingPtr& ring, const Element& a) const {
    std::vector<Term> terms;
    for (const auto& [m, c] : a)
      for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) terms.push_back({m.with_exponent(0, static_cast<Monomial::Exponent>(i)), c[i]});
    return Polynomial::from_terms(ring, std::move(terms));
  }
};

inline QuotientDomain quotient_domain(const Polynomial& p) {
  if (p.is_constant() || !p.is_univariate_in(0))
    throw InvalidArgument("modulus must be a nonconstant polynomial in x1 only");
  if (!is_irreducible_univariate(p)) throw Reducible("modulus " + p.to_string() + " is reducible");
  return QuotientDomain{p.field(), dense::monic(p.field(), dense::from_polynomial(p, 0)), p.num_vars()};
}

}  // namespace detail

/// Entry-wise reduction of the x1-coefficients modulo an irreducible p in K[x1].
inline QuotientCoeffMatrix map_mod_irreducible(const PolyMatrix& a, const Polynomial& p) {
  if (!same_ring(a.ring(), p.ring())) throw AmbientMismatch();
  auto dom = detail::quotient_domain(p);
  PolyMatrix reduced =
      a.map([&](const Polynomial& e) { return dom.to_polynomial(a.ring(), dom.from_polynomial(e)); });
  return QuotientCoeffMatrix{p.monic(), std::move(reduced)};
}

/// Rank of phi_p(A) over the fraction field of (K[x1]/<p>)[x2..xn].
inline std::size_t rank_mod_irreducible(const PolyMatrix& a, const Polynomial& p) {
  if (!same_ring(a.ring(), p.ring())) throw AmbientMismatch();
  auto dom = detail::quotient_domain(p);
  DenseMatrix<detail::QuotientDomain> m(a.rows(), std::vector<detail::QuotientTerms>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = dom.from_polynomial(a(i, j));
  return fraction_free_rank(dom, std::move(m));
}

}  // namespace polysnf
