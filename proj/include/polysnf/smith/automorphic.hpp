#pragma once

#include "polysnf/automorphism/tame.hpp"
#include "polysnf/smith/decide.hpp"

namespace polysnf {

/// Image of SmithData under a ring automorphism. An automorphism maps the
/// minors of G to the minors of psi(G) and preserves gcds up to units, so
/// d_i(psi(G)) is psi(d_i(G)) made monic.
inline SmithData transport(const SmithData& data, const TameAut& psi, const PolyMatrix& target) {
  std::vector<Polynomial> divisors;
  for (const auto& d : data.divisors) divisors.push_back(psi.apply(d).monic());
  return detail::assemble(target, std::move(divisors));
}

/// Decide F ~ S_F after pulling F back along psi^{-1}.
///
/// Ring automorphisms preserve equivalence and the unit-ideal property of
/// every J_k, so the verdict for psi^{-1}(F) is the verdict for F. An
/// Equivalent verdict carries the SNF of F itself.
inline Verdict decide_with_automorphism(const PolyMatrix& f, const TameAut& psi, const SmithOptions& options = {}) {
  if (!same_ring(f.ring(), psi.ring())) throw AmbientMismatch();
  Verdict v = decide_equivalence(invert(psi).apply(f), options);
  if (v.kind == VerdictKind::Equivalent) v.smith = transport(*v.smith, psi, f);
  return v;
}

}  // namespace polysnf
