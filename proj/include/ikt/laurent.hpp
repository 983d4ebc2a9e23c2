#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ikt/lattice.hpp"
#include "ikt/symrep.hpp"

namespace ikt {

/// Exact Laurent polynomial in q_1, ..., q_r; zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<Coords, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(int rank) : rank_(rank) {}

  static LaurentPoly monomial(const Weight& e, const Rational& c = 1) {
    LaurentPoly p(static_cast<int>(e.size()));
    if (c != 0) p.terms_[e.c] = c;
    return p;
  }
  static LaurentPoly constant(int rank, const Rational& c) { return monomial(Weight::zero(rank), c); }
  /// 1 - q^{-beta}
  static LaurentPoly one_minus_inverse(const Weight& beta) {
    LaurentPoly p = constant(static_cast<int>(beta.size()), 1);
    p.add_term((-beta).c, -1);
    return p;
  }

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Coords& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Coords& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    if (rank_ == 0) rank_ = o.rank_;
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    if (rank_ == 0) rank_ = o.rank_;
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const Rational& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= k;
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const Rational& k, LaurentPoly a) { return a *= k; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out(std::max(a.rank_, b.rank_));
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Coords e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  /// Multiply by q^e.
  LaurentPoly shifted(const Weight& e) const {
    LaurentPoly out(rank_);
    for (const auto& [k, c] : terms_) {
      Coords s = k;
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += e[i];
      out.terms_.emplace(std::move(s), c);
    }
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!first) s += " + ";
      first = false;
      s += it->second.get_str() + "*q^" + format_vector(it->first);
    }
    return s;
  }

 private:
  int rank_ = 0;
  Terms terms_;
};

inline LaurentPoly weyl_act(const WeylElement& w, const LaurentPoly& f) {
  LaurentPoly out(f.rank());
  for (const auto& [e, c] : f.terms()) out.add_term(act(w, e), c);
  return out;
}

/// Exact quotient f / (1 - q^{-beta}). Along each line k + Z beta the quotient coefficients are
/// the upper tail sums of f; division is exact iff every line sums to zero.
inline LaurentPoly divide_one_minus_inverse(const LaurentPoly& f, const Weight& beta) {
  if (beta.is_zero()) throw InexactDivision("division by 1 - q^0");
  std::size_t p = 0;
  while (beta[p] == 0) ++p;
  const std::int64_t step = beta[p];
  const std::int64_t modulus = step < 0 ? -step : step;
  // Group exponents by line; the parameter along the line is t with k = base + t beta.
  std::map<Coords, std::map<std::int64_t, Rational>> lines;
  for (const auto& [k, c] : f.terms()) {
    std::int64_t rem = k[p] % modulus;
    if (rem < 0) rem += modulus;
    const std::int64_t t = (k[p] - rem) / step;
    Coords base = k;
    for (std::size_t i = 0; i < base.size(); ++i) base[i] -= t * beta[i];
    lines[base][t] = c;
  }
  LaurentPoly q(f.rank());
  for (const auto& [base, coeffs] : lines) {
    Rational running = 0;
    const std::int64_t top = coeffs.rbegin()->first;
    const std::int64_t bottom = coeffs.begin()->first;
    for (std::int64_t t = top; t >= bottom; --t) {
      auto it = coeffs.find(t);
      if (it != coeffs.end()) running += it->second;
      if (running != 0) {
        Coords e = base;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += t * beta[i];
        q.add_term(e, running);
      }
    }
    if (running != 0)
      throw InexactDivision("numerator not divisible by 1 - q^-" + format_vector(beta));
  }
  return q;
}

/// numerator / prod_{beta in denominator} (1 - q^{-beta}).
struct RationalSection {
  LaurentPoly numerator;
  std::vector<Weight> denominator;
};

namespace detail {

inline bool canonical_direction(const Weight& b) {
  for (auto x : b.c)
    if (x != 0) return x > 0;
  return false;
}

}  // namespace detail

/// Rewrites every factor as 1 - q^{-beta} with beta in canonical orientation (first nonzero
/// coordinate positive), using 1/(1-q^{-beta}) = -q^{beta}/(1-q^{beta}).
inline RationalSection normalize(RationalSection s) {
  for (auto& b : s.denominator) {
    if (b.is_zero()) throw InexactDivision("zero weight in denominator");
    if (!detail::canonical_direction(b)) {
      s.numerator = -1 * s.numerator.shifted(b);
      b = -b;
    }
  }
  std::sort(s.denominator.begin(), s.denominator.end());
  return s;
}

enum class Execution { serial, parallel };

namespace detail {

inline std::vector<Weight> multiset_union(const std::vector<std::vector<Weight>>& lists) {
  std::map<Weight, std::size_t> best;
  for (const auto& l : lists) {
    std::map<Weight, std::size_t> count;
    for (const auto& b : l) ++count[b];
    for (const auto& [b, k] : count) best[b] = std::max(best[b], k);
  }
  std::vector<Weight> out;
  for (const auto& [b, k] : best) out.insert(out.end(), k, b);
  return out;
}

inline std::vector<Weight> multiset_difference(const std::vector<Weight>& big, const std::vector<Weight>& small) {
  std::map<Weight, std::size_t> count;
  for (const auto& b : big) ++count[b];
  for (const auto& b : small) --count[b];
  std::vector<Weight> out;
  for (const auto& [b, k] : count) out.insert(out.end(), k, b);
  return out;
}

inline unsigned worker_count(std::size_t jobs) {
  const unsigned hw = std::max(2u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(hw, jobs));
}

}  // namespace detail

/// Exact sum of sections; the result must be a Laurent polynomial. Terms are brought to the
/// common denominator chunk by chunk and the chunk totals are added in index order.
inline LaurentPoly sum_sections(const std::vector<RationalSection>& raw, int rank,
                                Execution policy = Execution::serial) {
  std::vector<RationalSection> terms;
  terms.reserve(raw.size());
  std::vector<std::vector<Weight>> dens;
  for (const auto& s : raw) {
    terms.push_back(normalize(s));
    dens.push_back(terms.back().denominator);
  }
  const std::vector<Weight> common = detail::multiset_union(dens);
  auto lift = [&](std::size_t lo, std::size_t hi) {
    LaurentPoly acc(rank);
    for (std::size_t i = lo; i < hi; ++i) {
      LaurentPoly t = terms[i].numerator;
      for (const auto& b : detail::multiset_difference(common, terms[i].denominator))
        t = t * LaurentPoly::one_minus_inverse(b);
      acc += t;
    }
    return acc;
  };
  LaurentPoly total(rank);
  if (policy == Execution::parallel && terms.size() > 1) {
    const unsigned workers = detail::worker_count(terms.size());
    std::vector<std::future<LaurentPoly>> parts;
    const std::size_t chunk = (terms.size() + workers - 1) / workers;
    for (std::size_t lo = 0; lo < terms.size(); lo += chunk)
      parts.push_back(std::async(std::launch::async, lift, lo, std::min(terms.size(), lo + chunk)));
    for (auto& p : parts) total += p.get();
  } else {
    total = lift(0, terms.size());
  }
  for (const auto& b : common) total = divide_one_minus_inverse(total, b);
  return total;
}

/// Sum over all of W of w(y / prod_{alpha > 0}(1 - q^{-alpha})).
inline LaurentPoly symmetrize_full(const GroupSpec& g, const LaurentPoly& y, Execution policy = Execution::serial) {
  const auto pos = g.positive_roots();
  std::vector<RationalSection> terms;
  for (const auto& w : weyl_group(g)) {
    std::vector<Weight> den;
    for (const auto& a : pos) den.push_back(act(w, a));
    terms.push_back({weyl_act(w, y), std::move(den)});
  }
  return sum_sections(terms, g.rank(), policy);
}

inline LaurentPoly weyl_character(const GroupSpec& g, const Weight& chi) {
  return symmetrize_full(g, LaurentPoly::monomial(chi));
}

inline bool is_invariant(const std::vector<WeylElement>& group, const LaurentPoly& f) {
  for (const auto& w : group)
    if (!(weyl_act(w, f) == f)) return false;
  return true;
}

/// (1/|W^lambda|) sum over W/W^lambda of w(x prod_A (1 - q^{-beta}) / prod_g (1 - q^{-beta})).
inline LaurentPoly symmetrize_induction(const GroupSpec& g, const Cocharacter& lambda, const LaurentPoly& x,
                                        const std::vector<Weight>& A, const std::vector<Weight>& gl,
                                        Execution policy = Execution::serial) {
  const auto stab = stabilizer(g, lambda);
  if (!is_invariant(stab, x)) throw NotInvariant("induction input is not W^lambda-invariant");
  LaurentPoly body = x;
  for (const auto& b : A) body = body * LaurentPoly::one_minus_inverse(b);
  std::vector<RationalSection> terms;
  for (const auto& w : coset_reps(g, lambda)) {
    std::vector<Weight> den;
    for (const auto& a : gl) den.push_back(act(w, a));
    terms.push_back({weyl_act(w, body), std::move(den)});
  }
  LaurentPoly out = sum_sections(terms, g.rank(), policy);
  out *= Rational(1, static_cast<long>(stab.size()));
  return out;
}

/// Dominant weight -> coefficient.
using CharacterCombination = std::map<Weight, Rational>;

inline void accumulate(CharacterCombination& acc, const Weight& chi, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = acc.try_emplace(chi, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

/// Memoized Weyl characters for one group.
class CharacterTable {
 public:
  explicit CharacterTable(GroupSpec g) : g_(std::move(g)) {}
  const LaurentPoly& operator()(const Weight& chi) {
    auto it = cache_.find(chi);
    if (it == cache_.end()) it = cache_.emplace(chi, weyl_character(g_, chi)).first;
    return it->second;
  }
  const GroupSpec& group() const { return g_; }

 private:
  GroupSpec g_;
  std::map<Weight, LaurentPoly> cache_;
};

/// Peels off the character of the lexicographically largest exponent until nothing is left.
inline CharacterCombination expand_in_characters(CharacterTable& table, const LaurentPoly& f) {
  const GroupSpec& g = table.group();
  std::vector<WeylElement> generators;
  for (int i = 0; i + 1 < g.rank(); ++i) {
    if (!g.same_block(i, i + 1)) continue;
    WeylElement s = WeylElement::identity(g.rank());
    std::swap(s.perm[i], s.perm[i + 1]);
    generators.push_back(s);
  }
  if (!is_invariant(generators, f)) throw NotInvariant("expansion input is not W-invariant");
  CharacterCombination out;
  LaurentPoly rest = f;
  while (!rest.is_zero()) {
    const auto& [top, c] = *rest.terms().rbegin();
    const Weight chi(top);
    if (!is_dominant(g, chi)) throw NotInvariant("leading exponent is not dominant");
    const Rational coeff = c;
    accumulate(out, chi, coeff);
    rest -= coeff * table(chi);
  }
  return out;
}

inline CharacterCombination expand_in_characters(const GroupSpec& g, const LaurentPoly& f) {
  CharacterTable table(g);
  return expand_in_characters(table, f);
}

inline constexpr std::size_t kMaxSubsetWeights = 12;

/// Alternating sum over subsets I of {beta : <lambda, beta> < 0} of
/// (-1)^{|I| + l(w)} Gamma((chi - sigma_I)^+), wall terms dropped.
inline CharacterCombination bbw_pushforward(const SymmetricRep& v, const Cocharacter& lambda, const Weight& chi) {
  const GroupSpec& g = v.group();
  const LeviDatum ld = levi(g, lambda);
  for (const auto& b : ld.sub_blocks)
    for (std::size_t k = 0; k + 1 < b.size(); ++k)
      if (chi[b[k]] < chi[b[k + 1]]) throw NotDominant("bbw_pushforward requires chi dominant for the Levi");
  const auto neg = select_weights(v, lambda, [](std::int64_t p) { return p < 0; });
  if (neg.size() > kMaxSubsetWeights)
    throw TooManyWeights("subset enumeration limited to " + std::to_string(kMaxSubsetWeights) + " weights");
  CharacterCombination out;
  const std::size_t m = neg.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Weight x = chi;
    int size = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) {
        x -= neg[i];
        ++size;
      }
    const auto sd = shifted_dominant(g, x);
    if (!sd) continue;
    accumulate(out, sd->chi_plus, ((size + sd->length) % 2 == 0) ? 1 : -1);
  }
  return out;
}

}  // namespace ikt
