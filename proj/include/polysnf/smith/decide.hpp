#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polysnf/smith/recognize.hpp"
#include "polysnf/smith/smith.hpp"

namespace polysnf {

enum class VerdictKind { Equivalent, NotEquivalent, Inconclusive };

/// Which hypothesis class certified an Equivalent verdict.
enum class Justification {
  None,
  ZeroMatrix,
  /// d_gamma lies in K[x1].
  UnivariateDivisor,
  /// d_gamma = (x_r - f_r)^t up to a unit.
  SingleLinearPower,
  /// d_gamma = f1 * prod (x_i - f_i)^{t_i}.
  TriangularForm,
};

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  /// Smallest k with J_k != R (NotEquivalent only).
  std::size_t k = 0;
  /// Present for Equivalent.
  std::optional<SmithData> smith;
  std::optional<DeterminantForm> form;
  Justification justification = Justification::None;
  std::string reason;

  static Verdict not_equivalent(std::size_t k) {
    Verdict v;
    v.kind = VerdictKind::NotEquivalent;
    v.k = k;
    return v;
  }
};

inline const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Equivalent:
      return "equivalent";
    case VerdictKind::NotEquivalent:
      return "not_equivalent";
    default:
      return "inconclusive";
  }
}

inline const char* to_string(Justification j) {
  switch (j) {
    case Justification::ZeroMatrix:
      return "zero_matrix";
    case Justification::UnivariateDivisor:
      return "univariate_divisor";
    case Justification::SingleLinearPower:
      return "single_linear_power";
    case Justification::TriangularForm:
      return "triangular_form";
    default:
      return "none";
  }
}

/// Three-valued test of F ~ S_F.
///
/// A non-unit J_k proves non-equivalence for any F. When every J_k is the
/// unit ideal, equivalence is certified only if d_gamma has the recognized
/// triangular shape; otherwise the answer is Inconclusive.
inline Verdict decide_equivalence(const PolyMatrix& f, const SmithOptions& options = {}) {
  const std::size_t gamma = rank(f);
  if (gamma == 0) {
    Verdict v;
    v.kind = VerdictKind::Equivalent;
    v.justification = Justification::ZeroMatrix;
    v.smith = detail::assemble(f, {Polynomial::one(f.ring())});
    return v;
  }
  std::vector<Polynomial> divisors{Polynomial::one(f.ring())};
  for (std::size_t k = 1; k <= gamma; ++k) {
    auto minors = all_k_minors(f, k, options.minors);
    Polynomial dk = detail::fold_gcd(minors, options.gcd);
    divisors.push_back(dk);
    if (!detail::reduce_minors(k, std::move(minors), dk, options.groebner).is_unit) return Verdict::not_equivalent(k);
  }
  const Polynomial& top = divisors.back();
  Verdict v;
  if (top.is_univariate_in(0)) {
    v.justification = Justification::UnivariateDivisor;
  } else if (auto form = recognize_determinant_form(top)) {
    bool single = form->f1.is_one() && form->factors.size() == 1;
    v.justification = single ? Justification::SingleLinearPower : Justification::TriangularForm;
    v.form = std::move(form);
  } else {
    v.reason = "undecided: d_gamma = " + top.to_string() + " is not of triangular form";
    return v;
  }
  v.kind = VerdictKind::Equivalent;
  v.smith = detail::assemble(f, std::move(divisors));
  return v;
}

}  // namespace polysnf
