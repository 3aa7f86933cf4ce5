#pragma once

// Independent reference computations used to cross-check the library. None
// of these call into groebner or gcd code.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <vector>

#include "polysnf/algebra/polynomial.hpp"

namespace polysnf::harness::oracle {

/// Coefficients modulo p (p > 0) or over Q (p == 0), little-endian.
struct UniPoly {
  std::vector<mpq_class> c;
  long p = 0;

  void fix() {
    for (auto& x : c) {
      if (p != 0) {
        mpz_class num = x.get_num() % p;
        mpz_class den = x.get_den() % p;
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p).get_mpz_t());
        num = (num * inv) % p;
        if (num < 0) num += p;
        x = num;
      }
    }
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  mpq_class inverse(const mpq_class& a) const {
    if (p == 0) return 1 / a;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), a.get_num().get_mpz_t(), mpz_class(p).get_mpz_t());
    return inv;
  }
};

/// Plain Euclidean remainder sequence; true iff gcd(a, b) is a nonzero constant.
inline bool euclid_coprime(UniPoly a, UniPoly b) {
  a.fix();
  b.fix();
  while (!b.c.empty()) {
    while (a.c.size() >= b.c.size() && !a.c.empty()) {
      mpq_class q = a.c.back() * b.inverse(b.c.back());
      std::size_t shift = a.c.size() - b.c.size();
      for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i + shift] -= q * b.c[i];
      a.fix();
    }
    std::swap(a, b);
  }
  return a.c.size() == 1;
}

inline UniPoly to_uni(const Polynomial& f, std::size_t var, long p) {
  UniPoly u;
  u.p = p;
  for (const auto& t : f.terms()) {
    std::size_t e = t.monomial[var];
    if (u.c.size() <= e) u.c.resize(e + 1, 0);
    u.c[e] = t.coeff;
  }
  u.fix();
  return u;
}

/// 1 in <gens> over F_p, decided by linear algebra on the degree-D Macaulay
/// matrix, where D is an effective Nullstellensatz degree bound supplied by
/// the caller. Every row is m * g with deg(m * g) <= D; 1 is in the ideal iff
/// the constant monomial lies in the row span.
inline bool macaulay_unit(const std::vector<Polynomial>& gens, long p, unsigned bound) {
  const std::size_t n = gens.front().num_vars();
  // column index for every exponent vector of degree <= bound
  std::map<std::vector<unsigned>, std::size_t> column;
  std::vector<std::vector<unsigned>> all;
  std::vector<unsigned> e(n, 0);
  auto enumerate = [&](auto&& self, std::size_t v, unsigned left) -> void {
    if (v == n) {
      all.push_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[v] = k;
      self(self, v + 1, left - k);
    }
    e[v] = 0;
  };
  enumerate(enumerate, 0, bound);
  for (const auto& m : all) column.emplace(m, column.size());
  const std::size_t zero_col = column.at(std::vector<unsigned>(n, 0));

  auto residue = [p](const mpq_class& q) {
    mpz_class num = q.get_num() % p, den = q.get_den() % p, inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p).get_mpz_t());
    long r = mpz_class((num * inv) % p).get_si();
    return r < 0 ? r + p : r;
  };

  std::vector<std::vector<long>> rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    unsigned dg = g.total_degree();
    if (dg > bound) continue;
    for (const auto& m : all) {
      unsigned dm = 0;
      for (unsigned x : m) dm += x;
      if (dm + dg > bound) continue;
      std::vector<long> row(column.size(), 0);
      for (const auto& t : g.terms()) {
        std::vector<unsigned> s(n);
        for (std::size_t v = 0; v < n; ++v) s[v] = m[v] + t.monomial[v];
        row[column.at(s)] = residue(t.coeff);
      }
      rows.push_back(std::move(row));
    }
  }

  // Row-reduce; then test whether e_{zero_col} is in the span by reducing it.
  const std::size_t cols = column.size();
  std::vector<long> pivot_row_of(cols, -1);
  std::vector<std::vector<long>> echelon;
  auto inv_mod = [p](long a) {
    long r = 1, b = a % p, k = p - 2;
    while (k > 0) {
      if (k & 1) r = r * b % p;
      b = b * b % p;
      k >>= 1;
    }
    return r;
  };
  auto reduce = [&](std::vector<long>& row) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (row[c] == 0 || pivot_row_of[c] < 0) continue;
      const auto& pr = echelon[static_cast<std::size_t>(pivot_row_of[c])];
      long f = row[c];
      for (std::size_t k = c; k < cols; ++k) row[k] = ((row[k] - f * pr[k]) % p + p) % p;
    }
  };
  for (auto& row : rows) {
    reduce(row);
    std::size_t c = 0;
    while (c < cols && row[c] == 0) ++c;
    if (c == cols) continue;
    long inv = inv_mod(row[c]);
    for (auto& x : row) x = x * inv % p;
    // keep echelon fully reduced in pivot columns of later rows
    for (auto& other : echelon) {
      long f = other[c];
      if (f == 0) continue;
      for (std::size_t k = 0; k < cols; ++k) other[k] = ((other[k] - f * row[k]) % p + p) % p;
    }
    pivot_row_of[c] = static_cast<long>(echelon.size());
    echelon.push_back(row);
  }
  std::vector<long> target(cols, 0);
  target[zero_col] = 1;
  reduce(target);
  for (long x : target)
    if (x != 0) return false;
  return true;
}

/// Leibniz expansion over all permutations, with entries given row-major.
inline Polynomial leibniz_det(const std::vector<std::vector<Polynomial>>& a, const RingPtr& ring) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial det(ring);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Polynomial term = Polynomial::one(ring);
    for (std::size_t i = 0; i < n; ++i) term = term * a[i][perm[i]];
    det = (inversions % 2) ? det - term : det + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace polysnf::harness::oracle
