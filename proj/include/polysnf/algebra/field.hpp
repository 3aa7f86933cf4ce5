#pragma once

#include <gmpxx.h>

#include <string>

#include "polysnf/error.hpp"

namespace polysnf {

using Integer = mpz_class;
using Rational = mpq_class;

/// Coefficient field: either Q or F_p.
///
/// Elements of both fields are carried as `Rational`. Over F_p every element
/// is kept as an integer residue in [0, p), so the same value type flows
/// through all arithmetic and only the reduction step differs.
class Field {
 public:
  enum class Kind { Rationals, PrimeField };

  static Field rationals() { return Field(Kind::Rationals, Integer(0)); }

  static Field prime(const Integer& p) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
      throw InvalidArgument("field modulus " + p.get_str() + " is not prime");
    return Field(Kind::PrimeField, p);
  }

  Kind kind() const noexcept { return kind_; }
  bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }
  bool is_prime_field() const noexcept { return kind_ == Kind::PrimeField; }
  /// Zero for Q.
  const Integer& characteristic() const noexcept { return modulus_; }

  std::string name() const {
    return is_rationals() ? std::string("Q") : "F_" + modulus_.get_str();
  }

  /// Maps an arbitrary rational into the field's canonical representative.
  Rational reduce(const Rational& v) const {
    if (is_rationals()) return v;
    Integer den = v.get_den();
    Integer num = v.get_num();
    if (den != 1) {
      Integer inv;
      if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus_.get_mpz_t()) == 0)
        throw DivisionByZero();
      num *= inv;
    }
    return Rational(reduce_int(num));
  }

  Rational from_int(long v) const { return reduce(Rational(v)); }

  Rational add(const Rational& a, const Rational& b) const {
    if (is_rationals()) return a + b;
    Integer r = a.get_num() + b.get_num();
    if (r >= modulus_) r -= modulus_;
    return Rational(r);
  }

  Rational sub(const Rational& a, const Rational& b) const {
    if (is_rationals()) return a - b;
    Integer r = a.get_num() - b.get_num();
    if (r < 0) r += modulus_;
    return Rational(r);
  }

  Rational neg(const Rational& a) const {
    if (is_rationals()) return -a;
    if (a == 0) return a;
    return Rational(Integer(modulus_ - a.get_num()));
  }

  Rational mul(const Rational& a, const Rational& b) const {
    if (is_rationals()) return a * b;
    return Rational(reduce_int(a.get_num() * b.get_num()));
  }

  Rational inv(const Rational& a) const {
    if (a == 0) throw DivisionByZero();
    if (is_rationals()) return 1 / a;
    Integer r;
    mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), modulus_.get_mpz_t());
    return Rational(r);
  }

  Rational div(const Rational& a, const Rational& b) const { return mul(a, inv(b)); }

  /// Symmetric representative in (-p/2, p/2]; identity over Q.
  Rational symmetric(const Rational& a) const {
    if (is_rationals()) return a;
    Integer r = a.get_num();
    if (2 * r > modulus_) r -= modulus_;
    return Rational(r);
  }

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
  }

 private:
  Field(Kind kind, Integer modulus) : kind_(kind), modulus_(std::move(modulus)) {}

  Integer reduce_int(const Integer& v) const {
    Integer r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), modulus_.get_mpz_t());
    return r;
  }

  Kind kind_;
  Integer modulus_;
};

}  // namespace polysnf
