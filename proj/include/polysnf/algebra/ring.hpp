#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "polysnf/algebra/field.hpp"
#include "polysnf/error.hpp"

namespace polysnf {

/// The ambient ring K[x1, ..., xn]: a coefficient field plus ordered variable names.
///
/// Variable order is fixed at construction; x1 is the smallest variable in the
/// monomial order used everywhere in the library.
class Ring {
 public:
  Ring(Field field, std::vector<std::string> names)
      : field_(std::move(field)), names_(std::move(names)) {
    if (names_.empty()) throw InvalidArgument("a ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& n : names_) {
      if (n.empty()) throw InvalidArgument("empty variable name");
      if (!seen.insert(n).second) throw InvalidArgument("duplicate variable name '" + n + "'");
    }
  }

  const Field& field() const noexcept { return field_; }
  std::size_t num_vars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  std::optional<std::size_t> index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.field_ == b.field_ && a.names_ == b.names_;
  }

 private:
  Field field_;
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(Field field, std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(field), std::move(names));
}

/// x1..xn over the given field.
inline RingPtr make_standard_ring(Field field, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return make_ring(std::move(field), std::move(names));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

/// Exponent vector of a power product.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
    for (auto e : exps_) degree_ += e;
  }

  static Monomial variable(std::size_t n, std::size_t i, Exponent power = 1) {
    Monomial m(n);
    m.exps_[i] = power;
    m.degree_ = power;
    return m;
  }

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::uint64_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  /// Highest variable index with a positive exponent.
  std::optional<std::size_t> max_var() const {
    for (std::size_t i = exps_.size(); i-- > 0;)
      if (exps_[i] != 0) return i;
    return std::nullopt;
  }

  Monomial with_exponent(std::size_t i, Exponent e) const {
    Monomial m = *this;
    m.degree_ = m.degree_ - m.exps_[i] + e;
    m.exps_[i] = e;
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m.exps_[i] = a.exps_[i] + b.exps_[i];
    m.degree_ = a.degree_ + b.degree_;
    return m;
  }

  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m.exps_[i] = a.exps_[i] - b.exps_[i];
    m.degree_ = a.degree_ - b.degree_;
    return m;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
      m.degree_ += m.exps_[i];
    }
    return m;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
};

/// Graded reverse lexicographic order with x1 < x2 < ... < xn.
inline std::strong_ordering grevlex(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex(a, b) < 0; }
};

}  // namespace polysnf
