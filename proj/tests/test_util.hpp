#pragma once

#include <string>
#include <vector>

#include "polysnf/algebra/parse.hpp"
#include "polysnf/polymatrix/poly_matrix.hpp"

namespace polysnf::testing {

inline RingPtr q_ring(std::size_t n) { return make_standard_ring(Field::rationals(), n); }
inline RingPtr fp_ring(long p, std::size_t n) { return make_standard_ring(Field::prime(p), n); }

inline Polynomial P(const RingPtr& ring, const std::string& text) { return parse_poly(text, ring); }

inline PolyMatrix M(const RingPtr& ring, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Polynomial>> polys;
  for (const auto& r : rows) {
    polys.emplace_back();
    for (const auto& s : r) polys.back().push_back(P(ring, s));
  }
  return PolyMatrix::from_rows(ring, polys);
}

/// Polynomial from explicit (coefficient, exponents) pairs, bypassing the parser.
inline Polynomial T(const RingPtr& ring, const std::vector<std::pair<long, std::vector<unsigned>>>& terms) {
  std::vector<Term> out;
  for (const auto& [c, e] : terms) out.push_back({Monomial(std::vector<Monomial::Exponent>(e.begin(), e.end())), Rational(c)});
  return Polynomial::from_terms(ring, std::move(out));
}

}  // namespace polysnf::testing
