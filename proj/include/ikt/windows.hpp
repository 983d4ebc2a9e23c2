#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "ikt/laurent.hpp"
#include "ikt/linalg.hpp"
#include "ikt/symrep.hpp"

namespace ikt {

/// Minkowski sum of segments [0, beta] over the weights of V.
class Zonotope {
 public:
  explicit Zonotope(const SymmetricRep& v) : rank_(v.group().rank()), lo_(rank_), hi_(rank_) {
    // Opposite weights share one direction: s_d ranges over [lo_d, hi_d] in the half zonotope.
    std::map<Weight, std::pair<Rational, Rational>> dirs;
    for (const auto& [w, m] : v.weights()) {
      if (w.is_zero()) continue;
      const bool canon = detail::canonical_direction(w);
      auto& range = dirs[canon ? w : -w];
      if (canon)
        range.second += ratio(m, 2);
      else
        range.first -= ratio(m, 2);
      for (int i = 0; i < rank_; ++i) {
        const Rational half_extent = ratio(w[i] * m, 2);
        if (w[i] > 0) hi_[i] += half_extent;
        if (w[i] < 0) lo_[i] += half_extent;
      }
    }
    for (auto& [d, range] : dirs) {
      directions_.push_back(d);
      bounds_.push_back(range);
    }
  }

  int rank() const { return rank_; }
  /// Coordinate-wise bounding box of the half zonotope.
  std::pair<Rational, Rational> half_extent(int i) const { return {lo_[i], hi_[i]}; }

  bool half_contains(const RationalWeight& t) const {
    const std::size_t k = directions_.size();
    Matrix eq(rank_, k + 1);
    for (int i = 0; i < rank_; ++i) {
      for (std::size_t j = 0; j < k; ++j) eq(i, j) = directions_[j][i];
      eq(i, k) = t[i];
    }
    const auto piv = rref(eq);
    if (!piv.empty() && piv.back() == k) return false;
    std::vector<bool> is_pivot(k, false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<std::size_t> free_vars;
    for (std::size_t j = 0; j < k; ++j)
      if (!is_pivot[j]) free_vars.push_back(j);
    const std::size_t f = free_vars.size();

    // Inequalities a . s_free <= b.
    std::vector<std::pair<std::vector<Rational>, Rational>> ineq;
    for (std::size_t a = 0; a < f; ++a) {
      std::vector<Rational> up(f), down(f);
      up[a] = 1;
      down[a] = -1;
      ineq.emplace_back(up, bounds_[free_vars[a]].second);
      ineq.emplace_back(down, -bounds_[free_vars[a]].first);
    }
    for (std::size_t i = 0; i < piv.size(); ++i) {
      // s_p = rhs - sum_a coef_a s_a
      std::vector<Rational> coef(f), neg(f);
      for (std::size_t a = 0; a < f; ++a) {
        coef[a] = eq(i, free_vars[a]);
        neg[a] = -coef[a];
      }
      const Rational& rhs = eq(i, k);
      const auto& [lo, hi] = bounds_[piv[i]];
      ineq.emplace_back(coef, rhs - lo);
      ineq.emplace_back(neg, hi - rhs);
    }
    return fourier_motzkin_feasible(std::move(ineq), f);
  }

 private:
  static bool fourier_motzkin_feasible(std::vector<std::pair<std::vector<Rational>, Rational>> ineq,
                                       std::size_t vars) {
    for (std::size_t v = 0; v < vars; ++v) {
      std::vector<std::pair<std::vector<Rational>, Rational>> pos, neg;
      std::map<std::vector<Rational>, Rational> keep;
      auto record = [&](std::vector<Rational> a, Rational b) {
        // Scale so the largest absolute coefficient is 1, then keep the tightest bound.
        Rational scale = 0;
        for (const auto& x : a) scale = std::max(scale, Rational(abs(x)));
        if (scale == 0) {
          keep[a] = std::min(keep.count(a) ? keep[a] : b, b);
          return;
        }
        for (auto& x : a) x /= scale;
        b /= scale;
        auto it = keep.find(a);
        if (it == keep.end())
          keep.emplace(std::move(a), b);
        else if (b < it->second)
          it->second = b;
      };
      for (auto& [a, b] : ineq) {
        if (a[v] > 0)
          pos.emplace_back(a, b);
        else if (a[v] < 0)
          neg.emplace_back(a, b);
        else
          record(a, b);
      }
      for (const auto& [ap, bp] : pos)
        for (const auto& [an, bn] : neg) {
          const Rational lp = ap[v], ln = -an[v];
          std::vector<Rational> a(ap.size());
          for (std::size_t j = 0; j < a.size(); ++j) a[j] = ln * ap[j] + lp * an[j];
          a[v] = 0;
          record(std::move(a), ln * bp + lp * bn);
        }
      ineq.assign(keep.begin(), keep.end());
      for (const auto& [a, b] : ineq) {
        bool all_zero = std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
        if (all_zero && b < 0) return false;
      }
    }
    for (const auto& [a, b] : ineq)
      if (b < 0) return false;
    return true;
  }

  int rank_ = 0;
  std::vector<Rational> lo_, hi_;
  std::vector<Weight> directions_;
  std::vector<std::pair<Rational, Rational>> bounds_;
};

inline bool half_zonotope_contains(const Zonotope& z, const RationalWeight& t) { return z.half_contains(t); }

/// Descending lexicographic order: highest weight first.
inline void sort_basis(std::vector<Weight>& ws) { std::sort(ws.begin(), ws.end(), std::greater<>()); }

struct WindowBasis {
  RationalWeight delta;
  std::vector<Weight> weights;

  std::size_t size() const { return weights.size(); }
  std::ptrdiff_t index_of(const Weight& chi) const {
    auto it = std::find(weights.begin(), weights.end(), chi);
    return it == weights.end() ? -1 : it - weights.begin();
  }
};

inline std::pair<Coords, Coords> window_box(const LocalModel& m) {
  const Zonotope z(m.rep);
  const RationalWeight r = rho(m.group());
  Coords lo(m.rank()), hi(m.rank());
  for (int i = 0; i < m.rank(); ++i) {
    auto [a, b] = z.half_extent(i);
    const Rational low = a - r[i] - m.delta[i];
    const Rational high = b - r[i] - m.delta[i];
    mpz_class c, fl;
    mpz_cdiv_q(c.get_mpz_t(), low.get_num_mpz_t(), low.get_den_mpz_t());
    mpz_fdiv_q(fl.get_mpz_t(), high.get_num_mpz_t(), high.get_den_mpz_t());
    lo[i] = c.get_si();
    hi[i] = fl.get_si();
  }
  return {lo, hi};
}

/// Dominant chi with chi + rho + delta in the half zonotope.
inline WindowBasis enumerate_window(const LocalModel& m) {
  const Zonotope z(m.rep);
  const RationalWeight r = rho(m.group());
  const auto [lo, hi] = window_box(m);
  WindowBasis out;
  out.delta = m.delta;
  const GroupSpec& g = m.group();
  Weight chi = Weight::zero(m.rank());
  std::function<void(int)> scan = [&](int i) {
    if (i == m.rank()) {
      if (z.half_contains(RationalWeight(chi) + r + m.delta)) out.weights.push_back(chi);
      return;
    }
    std::int64_t top = hi[i];
    if (i > 0 && g.same_block(i - 1, i)) top = std::min(top, chi[i - 1]);
    for (std::int64_t x = lo[i]; x <= top; ++x) {
      chi[i] = x;
      scan(i + 1);
    }
  };
  scan(0);
  sort_basis(out.weights);
  return out;
}

struct FaceBasis {
  Cocharacter lambda;
  Rational b;
  std::vector<Weight> weights;
  std::vector<RationalWeight> psi;

  std::size_t size() const { return weights.size(); }
};

inline RationalWeight face_offset(const LocalModel& m, const Cocharacter& lambda) {
  const AttractingData ad = attracting(m.rep, lambda);
  return Rational(1, 2) * RationalWeight(sum(ad.A, m.rank())) - Rational(1, 2) * RationalWeight(sum(ad.g, m.rank()));
}

/// The window of the fixed locus: chi = 1/2 N - 1/2 g + psi with psi in the Levi window.
inline FaceBasis face_basis(const LocalModel& m, const Cocharacter& lambda) {
  FaceBasis fb;
  fb.lambda = lambda;
  fb.b = attracting(m.rep, lambda).b;
  fb.weights = enumerate_window(fixed_locus(m, lambda)).weights;
  const RationalWeight off = face_offset(m, lambda);
  for (const auto& chi : fb.weights) fb.psi.push_back(RationalWeight(chi) - off);
  return fb;
}

struct FaceDecomposition {
  RationalWeight psi;
  WeylElement w;
};

inline FaceDecomposition face_decompose(const LocalModel& m, const Cocharacter& lambda, const Weight& chi) {
  if (face_excess(m, lambda, chi) != 0) throw NotOnFace("weight " + format_vector(chi) + " is not on the face");
  FaceDecomposition d;
  d.psi = RationalWeight(chi) - face_offset(m, lambda);
  const LeviDatum ld = levi(m.group(), lambda);
  d.w = WeylElement::identity(m.rank());
  for (const auto& b : ld.sub_blocks) {
    std::vector<int> order(b.begin(), b.end());
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return d.psi[i] > d.psi[j]; });
    for (std::size_t k = 0; k < b.size(); ++k) d.w.perm[order[k]] = b[k];
  }
  const LocalModel fixed = fixed_locus(m, lambda);
  const RationalWeight moved = act(d.w, d.psi);
  const RationalWeight t = moved + rho(fixed.group()) + m.delta;
  if (!Zonotope(fixed.rep).half_contains(t)) throw NotOnFace("psi-component lies outside the Levi window");
  return d;
}

struct SigmaSum {
  WeylElement w;             // w * (chi - sigma) is dominant
  Weight sigma;
  Cocharacter mu;            // w^{-1} tau
  Weight sigma_prime;        // sigma - N^lambda_mu
  bool certified = false;    // sigma_prime is a partial sum of {beta : <mu,beta> = 0, <lambda,beta> > 0}
  int subsets = 0;           // number of subsets of A_lambda producing this (w, sigma)
};

namespace detail {

inline bool is_partial_sum(const std::vector<Weight>& pool, const Weight& target) {
  std::set<Weight> reach{Weight::zero(target.size())};
  for (const auto& b : pool) {
    std::set<Weight> next = reach;
    for (const auto& s : reach) next.insert(s + b);
    reach = std::move(next);
  }
  return reach.count(target) > 0;
}

}  // namespace detail

/// Partial sums sigma of A_lambda whose shifted-dominant (chi - sigma)^+ lies on the face of tau.
inline std::vector<SigmaSum> sigma_sums(const LocalModel& m, const Cocharacter& lambda, const Cocharacter& tau,
                                        const Weight& chi) {
  const GroupSpec& g = m.group();
  if (!is_dominant(g, lambda) || !is_dominant(g, tau)) throw NotDominant("sigma_sums requires dominant cocharacters");
  if (face_excess(m, lambda, chi) != 0) throw NotOnFace("chi is not on the face of lambda");
  const auto A = attracting(m.rep, lambda).A;
  if (A.size() > 20) throw TooManyWeights("too many attracting weights for subset enumeration");
  std::map<std::pair<WeylElement, Weight>, SigmaSum> found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << A.size()); ++mask) {
    Weight sigma = Weight::zero(m.rank());
    for (std::size_t i = 0; i < A.size(); ++i)
      if (mask >> i & 1) sigma += A[i];
    const auto sd = shifted_dominant(g, chi - sigma);
    if (!sd || face_excess(m, tau, sd->chi_plus) != 0) continue;
    auto key = std::make_pair(sd->w, sigma);
    auto it = found.find(key);
    if (it != found.end()) {
      ++it->second.subsets;
      continue;
    }
    SigmaSum s;
    s.w = sd->w;
    s.sigma = sigma;
    s.mu = act(sd->w.inverse(), tau);
    s.sigma_prime = sigma - relative(m.rep, lambda, s.mu).N;
    std::vector<Weight> pool;
    for (const auto& b : m.rep.expanded())
      if (pairing(s.mu, b) == 0 && pairing(lambda, b) > 0) pool.push_back(b);
    s.certified = detail::is_partial_sum(pool, s.sigma_prime);
    s.subsets = 1;
    found.emplace(std::move(key), std::move(s));
  }
  std::vector<SigmaSum> out;
  for (auto& [k, s] : found) out.push_back(std::move(s));
  return out;
}

}  // namespace ikt
