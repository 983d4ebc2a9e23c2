#pragma once

// Independent reference computations used by the tests. Nothing here calls into the library's
// algorithms; inputs and outputs are plain integer vectors and GMP rationals.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;
using Poly = std::map<Vec, std::int64_t>;
using Perm = std::vector<int>;

inline int rank_of(const std::vector<int>& blocks) { return std::accumulate(blocks.begin(), blocks.end(), 0); }

/// Schur polynomial of a partition in n variables, by enumerating semistandard tableaux.
inline Poly schur(const std::vector<std::int64_t>& partition, int n) {
  std::vector<std::int64_t> shape;
  for (auto p : partition)
    if (p > 0) shape.push_back(p);
  Poly out;
  if (static_cast<int>(shape.size()) > n) return out;
  std::vector<std::vector<int>> t(shape.size());
  for (std::size_t r = 0; r < shape.size(); ++r) t[r].assign(shape[r], 0);
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
    if (r == shape.size()) {
      Vec content(n, 0);
      for (const auto& row : t)
        for (int x : row) ++content[x];
      ++out[content];
      return;
    }
    if (c == static_cast<std::size_t>(shape[r])) {
      fill(r + 1, 0);
      return;
    }
    int lo = 0;
    if (c > 0) lo = t[r][c - 1];
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int x = lo; x < n; ++x) {
      t[r][c] = x;
      fill(r, c + 1);
    }
  };
  fill(0, 0);
  return out;
}

inline Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Vec e(ea.size() + eb.size());
      std::copy(ea.begin(), ea.end(), e.begin());
      std::copy(eb.begin(), eb.end(), e.begin() + ea.size());
      out[e] += ca * cb;
    }
  return out;
}

/// Character of the irreducible of GL(n_1) x ... x GL(n_k) with dominant highest weight chi.
inline Poly irreducible_character(const std::vector<int>& blocks, const Vec& chi) {
  Poly total{{Vec{}, 1}};
  int start = 0;
  for (int n : blocks) {
    const std::int64_t low = chi[start + n - 1];
    std::vector<std::int64_t> part(n);
    for (int i = 0; i < n; ++i) part[i] = chi[start + i] - low;
    Poly block;
    for (const auto& [e, c] : schur(part, n)) {
      Vec shifted = e;
      for (auto& x : shifted) x += low;
      block[shifted] = c;
    }
    total = multiply(total, block);
    start += n;
  }
  return total;
}

/// Weyl dimension formula: prod over i<j in a block of (chi_i - chi_j + j - i)/(j - i).
inline mpq_class weyl_dimension(const std::vector<int>& blocks, const Vec& chi) {
  mpq_class d = 1;
  int start = 0;
  for (int n : blocks) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) d *= mpq_class(chi[start + i] - chi[start + j] + j - i, j - i);
    start += n;
  }
  d.canonicalize();
  return d;
}

inline std::vector<Perm> block_permutations(const std::vector<int>& blocks) {
  const int r = rank_of(blocks);
  std::vector<int> block_of;
  for (std::size_t b = 0; b < blocks.size(); ++b) block_of.insert(block_of.end(), blocks[b], static_cast<int>(b));
  Perm p(r);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    bool ok = true;
    for (int i = 0; i < r; ++i)
      if (block_of[p[i]] != block_of[i]) ok = false;
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline bool fixes(const Perm& p, const Vec& x) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (x[p[i]] != x[i]) return false;
  return true;
}

inline Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

inline int inversions(const Perm& p) {
  int k = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++k;
  return k;
}

/// The double cosets of the stabilizers of lambda and mu in W, each as a set of permutations.
inline std::vector<std::set<Perm>> double_coset_orbits(const std::vector<int>& blocks, const Vec& lambda,
                                                       const Vec& mu) {
  const auto all = block_permutations(blocks);
  std::vector<Perm> sl, sm;
  for (const auto& p : all) {
    if (fixes(p, lambda)) sl.push_back(p);
    if (fixes(p, mu)) sm.push_back(p);
  }
  std::set<Perm> seen;
  std::vector<std::set<Perm>> out;
  for (const auto& w : all) {
    if (seen.count(w)) continue;
    std::set<Perm> orbit;
    for (const auto& a : sl)
      for (const auto& b : sm) orbit.insert(compose(a, compose(w, b)));
    seen.insert(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

/// Membership in (1/2) * sum of segments [0, beta], tested against every support inequality with
/// integer normal vectors in [-K, K]^r. Exact whenever every facet normal of the zonotope has a
/// representative in that box, which holds for the small weights used in the tests.
inline bool half_zonotope_support(const std::vector<Vec>& weights, const std::vector<mpq_class>& t, int K = 3) {
  const int r = static_cast<int>(t.size());
  Vec u(r, -K);
  while (true) {
    bool nonzero = false;
    for (auto x : u) nonzero = nonzero || x != 0;
    if (nonzero) {
      mpq_class lhs = 0, h = 0;
      for (int i = 0; i < r; ++i) lhs += mpq_class(u[i]) * t[i];
      for (const auto& b : weights) {
        std::int64_t p = 0;
        for (int i = 0; i < r; ++i) p += u[i] * b[i];
        if (p > 0) h += p;
      }
      if (lhs > h / 2) return false;
    }
    int i = 0;
    while (i < r && u[i] == K) u[i++] = -K;
    if (i == r) break;
    ++u[i];
  }
  return true;
}

inline std::vector<mpq_class> rho(const std::vector<int>& blocks) {
  std::vector<mpq_class> out;
  for (int n : blocks)
    for (int k = 0; k < n; ++k) out.emplace_back(n - 1 - 2 * k, 2);
  for (auto& q : out) q.canonicalize();
  return out;
}

/// Dominant chi in [-K, K]^r with chi + rho + delta in the half zonotope, sorted descending.
inline std::vector<Vec> window_scan(const std::vector<int>& blocks, const std::vector<Vec>& weights,
                                    const std::vector<mpq_class>& delta, int K = 4) {
  const int r = rank_of(blocks);
  const auto rh = rho(blocks);
  std::vector<int> block_of;
  for (std::size_t b = 0; b < blocks.size(); ++b) block_of.insert(block_of.end(), blocks[b], static_cast<int>(b));
  std::vector<Vec> out;
  Vec chi(r, -K);
  while (true) {
    bool dominant = true;
    for (int i = 0; i + 1 < r; ++i)
      if (block_of[i] == block_of[i + 1] && chi[i] < chi[i + 1]) dominant = false;
    if (dominant) {
      std::vector<mpq_class> t(r);
      for (int i = 0; i < r; ++i) t[i] = mpq_class(chi[i]) + rh[i] + delta[i];
      if (half_zonotope_support(weights, t)) out.push_back(chi);
    }
    int i = 0;
    while (i < r && chi[i] == K) chi[i++] = -K;
    if (i == r) break;
    ++chi[i];
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace oracle
