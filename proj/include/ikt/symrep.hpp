#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "ikt/lattice.hpp"

namespace ikt {

/// Weight multiset of a representation V of G, stored sorted as (weight, multiplicity).
class SymmetricRep {
 public:
  SymmetricRep() = default;
  SymmetricRep(GroupSpec g, const std::vector<std::pair<Weight, int>>& weights) : group_(std::move(g)) {
    std::map<Weight, int> merged;
    for (std::size_t k = 0; k < weights.size(); ++k) {
      const auto& [w, m] = weights[k];
      if (static_cast<int>(w.size()) != group_.rank())
        throw InputError("weight #" + std::to_string(k) + " " + format_vector(w) + " has length " +
                         std::to_string(w.size()) + ", expected rank " + std::to_string(group_.rank()));
      if (m < 0) throw InputError("weight #" + std::to_string(k) + " has negative multiplicity");
      if (m > 0) merged[w] += m;
    }
    weights_.assign(merged.begin(), merged.end());
  }
  SymmetricRep(GroupSpec g, const std::vector<Weight>& weights) : group_(std::move(g)) {
    std::map<Weight, int> merged;
    for (const auto& w : weights) {
      if (static_cast<int>(w.size()) != group_.rank()) throw InputError("weight length differs from rank");
      ++merged[w];
    }
    weights_.assign(merged.begin(), merged.end());
  }

  const GroupSpec& group() const { return group_; }
  const std::vector<std::pair<Weight, int>>& weights() const { return weights_; }

  std::vector<Weight> expanded() const {
    std::vector<Weight> out;
    for (const auto& [w, m] : weights_)
      for (int k = 0; k < m; ++k) out.push_back(w);
    return out;
  }
  int dimension() const {
    int d = 0;
    for (const auto& [w, m] : weights_) d += m;
    return d;
  }
  int multiplicity(const Weight& w) const {
    auto it = std::lower_bound(weights_.begin(), weights_.end(), std::make_pair(w, 0),
                               [](const auto& a, const auto& b) { return a.first < b.first; });
    return (it != weights_.end() && it->first == w) ? it->second : 0;
  }
  bool operator==(const SymmetricRep& o) const { return group_ == o.group_ && weights_ == o.weights_; }

 private:
  GroupSpec group_;
  std::vector<std::pair<Weight, int>> weights_;
};

inline bool check_symmetric(const SymmetricRep& v) {
  for (const auto& [w, m] : v.weights())
    if (v.multiplicity(-w) != m) return false;
  return true;
}

/// Weights of V whose pairing with lambda satisfies pred, with multiplicity.
template <class Pred>
std::vector<Weight> select_weights(const SymmetricRep& v, const Cocharacter& lambda, Pred pred) {
  std::vector<Weight> out;
  for (const auto& [w, m] : v.weights())
    if (pred(pairing(lambda, w)))
      for (int k = 0; k < m; ++k) out.push_back(w);
  return out;
}

template <class Pred>
std::vector<Weight> select_roots(const GroupSpec& g, const Cocharacter& lambda, Pred pred) {
  std::vector<Weight> out;
  for (const auto& a : g.roots())
    if (pred(pairing(lambda, a))) out.push_back(a);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Weight> fixed_weights(const SymmetricRep& v, const Cocharacter& lambda) {
  return select_weights(v, lambda, [](std::int64_t p) { return p == 0; });
}

struct AttractingData {
  Cocharacter lambda;
  std::vector<Weight> A;  // weights of V with <lambda, beta> > 0
  std::vector<Weight> g;  // roots with <lambda, alpha> > 0
  std::int64_t n = 0;
  Rational b;
};

inline AttractingData attracting(const SymmetricRep& v, const Cocharacter& lambda) {
  AttractingData d;
  d.lambda = lambda;
  d.A = select_weights(v, lambda, [](std::int64_t p) { return p > 0; });
  d.g = select_roots(v.group(), lambda, [](std::int64_t p) { return p > 0; });
  for (const auto& b : d.A) d.n += pairing(lambda, b);
  for (const auto& a : d.g) d.n -= pairing(lambda, a);
  d.b = ratio(d.n, 2);
  return d;
}

struct RelativeData {
  Cocharacter lambda;
  Cocharacter mu;
  std::vector<Weight> I;  // {beta in A_lambda : <mu, beta> < 0}
  std::vector<Weight> J;  // {alpha in g_lambda : <mu, alpha> < 0}
  std::int64_t d = 0;
  std::int64_t e = 0;
  std::int64_t c = 0;
  Weight N;
  Weight g;
  Weight script_N;
};

inline RelativeData relative(const SymmetricRep& v, const Cocharacter& lambda, const Cocharacter& mu) {
  const int r = v.group().rank();
  RelativeData d;
  d.lambda = lambda;
  d.mu = mu;
  for (const auto& b : attracting(v, lambda).A)
    if (pairing(mu, b) < 0) d.I.push_back(b);
  for (const auto& a : v.group().roots())
    if (pairing(lambda, a) > 0 && pairing(mu, a) < 0) d.J.push_back(a);
  std::sort(d.J.begin(), d.J.end());
  d.d = static_cast<std::int64_t>(d.I.size());
  d.e = static_cast<std::int64_t>(d.J.size());
  d.c = d.d - d.e;
  d.N = sum(d.I, r);
  d.g = sum(d.J, r);
  d.script_N = d.N - d.g;
  return d;
}

/// The local model V/G together with a rational window shift delta.
struct LocalModel {
  SymmetricRep rep;
  RationalWeight delta;

  LocalModel() = default;
  LocalModel(SymmetricRep v, RationalWeight d) : rep(std::move(v)), delta(std::move(d)) {
    if (static_cast<int>(delta.size()) != rep.group().rank()) throw InputError("delta length differs from rank");
  }
  explicit LocalModel(SymmetricRep v) : rep(std::move(v)) { delta = RationalWeight::zero(rep.group().rank()); }

  const GroupSpec& group() const { return rep.group(); }
  int rank() const { return rep.group().rank(); }
  bool operator==(const LocalModel& o) const { return rep == o.rep && delta == o.delta; }
};

/// The lambda-fixed locus: Levi group, lambda-null weights, and shift
/// delta - 1/2 (weights with positive pairing) + 1/2 (roots with positive pairing).
inline LocalModel fixed_locus(const LocalModel& m, const Cocharacter& lambda) {
  if (!is_dominant(m.group(), lambda)) throw NotDominant("fixed_locus requires a dominant cocharacter");
  const LeviDatum ld = levi(m.group(), lambda);
  const AttractingData ad = attracting(m.rep, lambda);
  const int r = m.rank();
  RationalWeight shift = m.delta;
  shift -= Rational(1, 2) * RationalWeight(sum(ad.A, r));
  shift += Rational(1, 2) * RationalWeight(sum(ad.g, r));
  return LocalModel(SymmetricRep(ld.group(), fixed_weights(m.rep, lambda)), shift);
}

/// <lambda, chi + rho + delta> - 1/2 <lambda, sum of weights with positive pairing>; never positive
/// on the window, zero exactly on the face of lambda.
inline Rational face_excess(const LocalModel& m, const Cocharacter& lambda, const Weight& chi) {
  RationalWeight t = RationalWeight(chi) + rho(m.group()) + m.delta;
  Rational s = pairing(lambda, t);
  for (const auto& [w, k] : m.rep.weights()) {
    const std::int64_t p = pairing(lambda, w);
    if (p > 0) s -= ratio(p * k, 2);
  }
  return s;
}

}  // namespace ikt
