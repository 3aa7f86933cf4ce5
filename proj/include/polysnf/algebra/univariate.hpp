#pragma once

#include <cstddef>
#include <tuple>
#include <utility>
#include <vector>

#include "polysnf/algebra/field.hpp"
#include "polysnf/algebra/polynomial.hpp"

namespace polysnf::dense {

/// Dense univariate polynomial, coefficient of x^i at index i, no trailing zeros.
using UPoly = std::vector<Rational>;

inline void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline long degree(const UPoly& a) { return static_cast<long>(a.size()) - 1; }

inline bool is_one(const UPoly& a) { return a.size() == 1 && a[0] == 1; }

inline UPoly add(const Field& f, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
  trim(r);
  return r;
}

inline UPoly sub(const Field& f, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
  trim(r);
  return r;
}

inline UPoly mul(const Field& f, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

inline UPoly scale(const Field& f, const UPoly& a, const Rational& c) {
  UPoly r;
  if (c == 0) return r;
  r.reserve(a.size());
  for (const auto& v : a) r.push_back(f.mul(v, c));
  return r;
}

/// Quotient and remainder of a by nonzero b.
inline std::pair<UPoly, UPoly> divmod(const Field& f, const UPoly& a, const UPoly& b) {
  if (b.empty()) throw DivisionByZero();
  UPoly r = a;
  if (r.size() < b.size()) return {UPoly{}, r};
  UPoly q(r.size() - b.size() + 1, Rational(0));
  Rational inv_lc = f.inv(b.back());
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational c = f.mul(r[k + b.size() - 1], inv_lc);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = f.sub(r[k + j], f.mul(c, b[j]));
  }
  trim(q);
  trim(r);
  return {q, r};
}

inline UPoly rem(const Field& f, const UPoly& a, const UPoly& b) { return divmod(f, a, b).second; }

inline UPoly monic(const Field& f, const UPoly& a) {
  if (a.empty() || a.back() == 1) return a;
  return scale(f, a, f.inv(a.back()));
}

/// Monic gcd (zero only if both inputs are zero).
inline UPoly gcd(const Field& f, UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly r = rem(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

/// Returns (g, s, t) with s*a + t*b = g monic.
inline std::tuple<UPoly, UPoly, UPoly> xgcd(const Field& f, const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b, s0{Rational(1)}, s1{}, t0{}, t1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(f, r0, r1);
    UPoly s2 = sub(f, s0, mul(f, q, s1));
    UPoly t2 = sub(f, t0, mul(f, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {r0, s0, t0};
  Rational c = f.inv(r0.back());
  return {scale(f, r0, c), scale(f, s0, c), scale(f, t0, c)};
}

inline UPoly derivative(const Field& f, const UPoly& a) {
  UPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(f.mul(a[i], f.from_int(static_cast<long>(i))));
  trim(r);
  return r;
}

/// a^e mod m for a nonnegative integer exponent.
inline UPoly powmod(const Field& f, const UPoly& a, const Integer& e, const UPoly& m) {
  UPoly result = rem(f, UPoly{Rational(1)}, m);
  UPoly base = rem(f, a, m);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(f, mul(f, result, result), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(f, mul(f, result, base), m);
  }
  return result;
}

/// Dense coefficients of a polynomial that only involves variable v.
inline UPoly from_polynomial(const Polynomial& p, std::size_t v) {
  UPoly out;
  for (const auto& t : p.terms()) {
    auto e = t.monomial[v];
    if (out.size() <= e) out.resize(e + 1, Rational(0));
    out[e] = t.coeff;
  }
  trim(out);
  return out;
}

inline Polynomial to_polynomial(const RingPtr& ring, const UPoly& a, std::size_t v) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      terms.push_back({Monomial::variable(ring->num_vars(), v, static_cast<Monomial::Exponent>(i)), a[i]});
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace polysnf::dense
