#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "polysnf/algebra/field.hpp"
#include "polysnf/algebra/ring.hpp"
#include "polysnf/error.hpp"

namespace polysnf {

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Sparse polynomial in canonical form.
///
/// Terms are stored strictly decreasing in grevlex order with nonzero
/// coefficients, so two equal polynomials have identical term vectors.
/// The zero polynomial has no terms.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const RingPtr& ring, const Rational& c) {
    Polynomial p(ring);
    Rational v = ring->field().reduce(c);
    if (v != 0) p.terms_.push_back({Monomial(ring->num_vars()), v});
    return p;
  }
  static Polynomial constant(const RingPtr& ring, long c) { return constant(ring, Rational(c)); }
  static Polynomial one(const RingPtr& ring) { return constant(ring, 1); }

  static Polynomial variable(const RingPtr& ring, std::size_t i, Monomial::Exponent power = 1) {
    if (i >= ring->num_vars()) throw InvalidArgument("variable index out of range");
    Polynomial p(ring);
    p.terms_.push_back({Monomial::variable(ring->num_vars(), i, power), Rational(1)});
    return p;
  }

  static Polynomial variable(const RingPtr& ring, const std::string& name) {
    auto idx = ring->index_of(name);
    if (!idx) throw InvalidArgument("unknown variable '" + name + "'");
    return variable(ring, *idx);
  }

  static Polynomial term(const RingPtr& ring, Monomial m, const Rational& c) {
    Polynomial p(ring);
    Rational v = ring->field().reduce(c);
    if (v != 0) p.terms_.push_back({std::move(m), v});
    return p;
  }

  /// Builds the canonical form from arbitrary (possibly repeated, zero, unreduced) terms.
  static Polynomial from_terms(const RingPtr& ring, std::vector<Term> terms) {
    const Field& f = ring->field();
    for (auto& t : terms) t.coeff = f.reduce(t.coeff);
    Polynomial p(ring);
    p.terms_ = combine(f, std::move(terms));
    return p;
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const Field& field() const { return ring_->field(); }
  std::size_t num_vars() const { return ring_->num_vars(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
  }
  bool is_nonzero_constant() const noexcept {
    return terms_.size() == 1 && terms_[0].monomial.is_one();
  }
  bool is_one() const noexcept { return is_nonzero_constant() && terms_[0].coeff == 1; }

  /// Constant term (zero if absent).
  Rational constant_coeff() const {
    if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
    return Rational(0);
  }

  const Term& leading_term() const { return terms_.front(); }

  /// Everything but the leading term.
  Polynomial tail() const {
    Polynomial out(ring_);
    if (terms_.size() > 1) out.terms_.assign(terms_.begin() + 1, terms_.end());
    return out;
  }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Rational& leading_coeff() const { return terms_.front().coeff; }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
  }

  /// Degree in variable v; -1 for the zero polynomial.
  long degree_in(std::size_t v) const {
    long d = -1;
    for (const auto& t : terms_) d = std::max<long>(d, t.monomial[v]);
    return d;
  }

  bool involves(std::size_t v) const {
    for (const auto& t : terms_)
      if (t.monomial[v] != 0) return true;
    return false;
  }

  /// Highest-index variable occurring in any term; nullopt for constants.
  std::optional<std::size_t> max_var() const {
    std::optional<std::size_t> best;
    for (const auto& t : terms_) {
      auto m = t.monomial.max_var();
      if (m && (!best || *m > *best)) best = m;
    }
    return best;
  }

  /// True when every term uses only variable v (constants included).
  bool is_univariate_in(std::size_t v) const {
    for (const auto& t : terms_)
      if (t.monomial.degree() != t.monomial[v]) return false;
    return true;
  }

  /// Coefficient of v^k, as a polynomial free of v.
  Polynomial coefficient_in(std::size_t v, Monomial::Exponent k) const {
    Polynomial out(ring_);
    for (const auto& t : terms_)
      if (t.monomial[v] == k) out.terms_.push_back({t.monomial.with_exponent(v, 0), t.coeff});
    out.terms_ = sorted(std::move(out.terms_));
    return out;
  }

  /// Leading coefficient when viewed as a univariate polynomial in v.
  Polynomial leading_coeff_in(std::size_t v) const {
    long d = degree_in(v);
    if (d < 0) return Polynomial(ring_);
    return coefficient_in(v, static_cast<Monomial::Exponent>(d));
  }

  /// Scaled so the grevlex-leading coefficient is 1; zero stays zero.
  Polynomial monic() const {
    if (is_zero() || leading_coeff() == 1) return *this;
    return scaled(field().inv(leading_coeff()));
  }

  Polynomial scaled(const Rational& c) const {
    const Field& f = field();
    Rational v = f.reduce(c);
    Polynomial out(ring_);
    if (v == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.monomial, f.mul(t.coeff, v)});
    return out;
  }

  /// this * c * m
  Polynomial mul_term(const Monomial& m, const Rational& c) const {
    const Field& f = field();
    Polynomial out(ring_);
    if (c == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.monomial * m, f.mul(t.coeff, c)});
    return out;
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = one(ring_);
    Polynomial base = *this;
    while (e) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e) base = base * base;
    }
    return result;
  }

  Polynomial derivative(std::size_t v) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      auto e = t.monomial[v];
      if (e == 0) continue;
      out.push_back({t.monomial.with_exponent(v, e - 1), t.coeff * e});
    }
    return from_terms(ring_, std::move(out));
  }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& t : out.terms_) t.coeff = field().neg(t.coeff);
    return out;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    return merge(a, b, false);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    return merge(a, b, true);
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    const RingPtr& ring = a.ring_ ? a.ring_ : b.ring_;
    Polynomial out(ring);
    if (a.is_zero() || b.is_zero()) return out;
    if (a.size() == 1) return b.mul_term(a.terms_[0].monomial, a.terms_[0].coeff);
    if (b.size() == 1) return a.mul_term(b.terms_[0].monomial, b.terms_[0].coeff);
    const Field& f = ring->field();
    std::vector<Term> prods;
    prods.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) prods.push_back({s.monomial * t.monomial, f.mul(s.coeff, t.coeff)});
    out.terms_ = combine(f, std::move(prods));
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].monomial == b.terms_[i].monomial))
        return false;
    return true;
  }

  /// Total order on canonical forms (term-by-term); used only for deterministic sorting.
  friend bool canonical_less(const Polynomial& a, const Polynomial& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      auto c = grevlex(a.terms_[i].monomial, b.terms_[i].monomial);
      if (c != 0) return c < 0;
      if (a.terms_[i].coeff != b.terms_[i].coeff) return a.terms_[i].coeff < b.terms_[i].coeff;
    }
    return a.size() < b.size();
  }

  std::string to_string() const;

 private:
  static void check_same(const Polynomial& a, const Polynomial& b) {
    if (!a.ring_ || !b.ring_ || !same_ring(a.ring_, b.ring_)) throw AmbientMismatch();
  }

  static std::vector<Term> sorted(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return grevlex(x.monomial, y.monomial) > 0; });
    return terms;
  }

  static std::vector<Term> combine(const Field& f, std::vector<Term> terms) {
    terms = sorted(std::move(terms));
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
      if (!out.empty() && out.back().monomial == t.monomial) {
        out.back().coeff = f.add(out.back().coeff, t.coeff);
      } else {
        if (!out.empty() && out.back().coeff == 0) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
    return out;
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    const Field& f = a.field();
    Polynomial out(a.ring_);
    out.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      int c;
      if (i == a.size()) c = -1;
      else if (j == b.size()) c = 1;
      else {
        auto o = grevlex(a.terms_[i].monomial, b.terms_[j].monomial);
        c = o > 0 ? 1 : (o < 0 ? -1 : 0);
      }
      if (c > 0) {
        out.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        const Term& t = b.terms_[j++];
        out.terms_.push_back({t.monomial, subtract ? f.neg(t.coeff) : t.coeff});
      } else {
        Rational v = subtract ? f.sub(a.terms_[i].coeff, b.terms_[j].coeff)
                              : f.add(a.terms_[i].coeff, b.terms_[j].coeff);
        if (v != 0) out.terms_.push_back({a.terms_[i].monomial, std::move(v)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Quotient a / b when b divides a exactly; nullopt otherwise.
inline std::optional<Polynomial> try_divide(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring())) throw AmbientMismatch();
  if (b.is_zero()) throw DivisionByZero();
  const Field& f = a.field();
  Polynomial q(a.ring());
  if (a.is_zero()) return q;
  if (b.is_nonzero_constant()) return a.scaled(f.inv(b.leading_coeff()));
  const Monomial& lb = b.leading_monomial();
  Rational inv_lc = f.inv(b.leading_coeff());
  std::vector<Term> quotient;
  Polynomial r = a;
  while (!r.is_zero()) {
    const Term& lt = r.leading_term();
    if (!lb.divides(lt.monomial)) return std::nullopt;
    Monomial m = lt.monomial / lb;
    Rational c = f.mul(lt.coeff, inv_lc);
    quotient.push_back({m, c});
    r = r - b.mul_term(m, c);
  }
  return Polynomial::from_terms(a.ring(), std::move(quotient));
}

/// a / b, throwing NotDivisible when the division leaves a remainder.
inline Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  auto q = try_divide(a, b);
  if (!q) throw NotDivisible();
  return *std::move(q);
}

inline bool divides(const Polynomial& d, const Polynomial& a) {
  if (d.is_zero()) return a.is_zero();
  return try_divide(a, d).has_value();
}

/// Simultaneous substitution x_i := images[i] for every i with an engaged image.
inline Polynomial substitute(const Polynomial& f, const std::vector<std::optional<Polynomial>>& images) {
  const RingPtr& ring = f.ring();
  const std::size_t n = ring->num_vars();
  if (images.size() != n) throw InvalidArgument("substitution needs one slot per variable");
  for (const auto& img : images)
    if (img && !same_ring(img->ring(), ring)) throw AmbientMismatch();

  // powers[i][e] = images[i]^e, filled lazily
  std::vector<std::vector<Polynomial>> powers(n);
  auto power = [&](std::size_t i, Monomial::Exponent e) -> const Polynomial& {
    auto& table = powers[i];
    if (table.empty()) table.push_back(Polynomial::one(ring));
    while (table.size() <= e) table.push_back(table.back() * *images[i]);
    return table[e];
  };

  std::vector<Term> acc;
  for (const auto& t : f.terms()) {
    std::vector<Monomial::Exponent> kept_exps(n, 0);
    Polynomial prod = Polynomial::term(ring, Monomial(n), t.coeff);
    for (std::size_t i = 0; i < n; ++i) {
      auto e = t.monomial[i];
      if (e == 0) continue;
      if (images[i]) prod = prod * power(i, e);
      else kept_exps[i] = e;
    }
    Monomial km(kept_exps);
    for (const auto& pt : prod.terms()) acc.push_back({pt.monomial * km, pt.coeff});
  }
  return Polynomial::from_terms(ring, std::move(acc));
}

/// Substitution keyed by variable name.
inline Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& assignments) {
  std::vector<std::optional<Polynomial>> images(f.num_vars());
  for (const auto& [name, value] : assignments) {
    auto idx = f.ring()->index_of(name);
    if (!idx) throw InvalidArgument("unknown variable '" + name + "' in substitution");
    images[*idx] = value;
  }
  return substitute(f, images);
}

/// Full substitution x_i := images[i] for all i.
inline Polynomial substitute_all(const Polynomial& f, const std::vector<Polynomial>& images) {
  std::vector<std::optional<Polynomial>> slots(images.begin(), images.end());
  return substitute(f, slots);
}

namespace detail {

inline std::string format_monomial(const Ring& ring, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

}  // namespace detail

inline std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const Rational& c = t.coeff;
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono = detail::format_monomial(*ring_, t.monomial);
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace polysnf
