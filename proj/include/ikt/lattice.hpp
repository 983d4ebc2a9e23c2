#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ikt/errors.hpp"
#include "ikt/rational.hpp"

namespace ikt {

using Coords = std::vector<std::int64_t>;

/// Integer vector in the rank-r lattice; the tag separates weights from cocharacters.
template <class Tag>
struct LatticeVector {
  Coords c;

  LatticeVector() = default;
  explicit LatticeVector(Coords v) : c(std::move(v)) {}
  LatticeVector(std::initializer_list<std::int64_t> v) : c(v) {}
  static LatticeVector zero(std::size_t r) { return LatticeVector(Coords(r, 0)); }

  std::size_t size() const { return c.size(); }
  std::int64_t operator[](std::size_t i) const { return c[i]; }
  std::int64_t& operator[](std::size_t i) { return c[i]; }
  bool is_zero() const {
    return std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x == 0; });
  }

  auto operator<=>(const LatticeVector&) const = default;

  LatticeVector operator-() const {
    LatticeVector r(*this);
    for (auto& x : r.c) x = -x;
    return r;
  }
  LatticeVector& operator+=(const LatticeVector& o) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
  }
  LatticeVector& operator-=(const LatticeVector& o) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
  }
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(std::int64_t k, LatticeVector a) {
    for (auto& x : a.c) x *= k;
    return a;
  }
};

struct WeightTag;
struct CocharacterTag;
using Weight = LatticeVector<WeightTag>;
using Cocharacter = LatticeVector<CocharacterTag>;

struct RationalWeight {
  std::vector<Rational> c;

  RationalWeight() = default;
  explicit RationalWeight(std::vector<Rational> v) : c(std::move(v)) {}
  explicit RationalWeight(const Weight& w) : c(w.c.begin(), w.c.end()) {}
  static RationalWeight zero(std::size_t r) { return RationalWeight(std::vector<Rational>(r)); }

  std::size_t size() const { return c.size(); }
  const Rational& operator[](std::size_t i) const { return c[i]; }
  Rational& operator[](std::size_t i) { return c[i]; }

  bool operator==(const RationalWeight& o) const { return c == o.c; }
  bool operator<(const RationalWeight& o) const { return c < o.c; }

  RationalWeight& operator+=(const RationalWeight& o) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
  }
  RationalWeight& operator-=(const RationalWeight& o) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
  }
  friend RationalWeight operator+(RationalWeight a, const RationalWeight& b) { return a += b; }
  friend RationalWeight operator-(RationalWeight a, const RationalWeight& b) { return a -= b; }
  friend RationalWeight operator*(const Rational& k, RationalWeight a) {
    for (auto& x : a.c) x *= k;
    return a;
  }

  bool is_integral() const {
    return std::all_of(c.begin(), c.end(), [](const Rational& q) { return q.get_den() == 1; });
  }
  Weight to_weight() const {
    if (!is_integral()) throw Error("rational weight is not integral");
    Coords v;
    v.reserve(c.size());
    for (const auto& q : c) v.push_back(q.get_num().get_si());
    return Weight(std::move(v));
  }
};

inline std::int64_t pairing(const Cocharacter& l, const Weight& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < l.size(); ++i) s += l[i] * b[i];
  return s;
}

inline Rational pairing(const Cocharacter& l, const RationalWeight& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < l.size(); ++i) s += Rational(l[i]) * b[i];
  return s;
}

inline Weight sum(const std::vector<Weight>& ws, std::size_t r) {
  Weight s = Weight::zero(r);
  for (const auto& w : ws) s += w;
  return s;
}

template <class V>
std::string format_vector(const V& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

/// GL(n_1) x ... x GL(n_k); a block of size one is a torus factor.
class GroupSpec {
 public:
  GroupSpec() = default;
  explicit GroupSpec(std::vector<int> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw InputError("group must have at least one block");
    int start = 0;
    for (int b : blocks_) {
      if (b < 1) throw InputError("block sizes must be positive");
      starts_.push_back(start);
      for (int i = 0; i < b; ++i) block_of_.push_back(static_cast<int>(starts_.size()) - 1);
      start += b;
    }
    rank_ = start;
  }

  const std::vector<int>& blocks() const { return blocks_; }
  int rank() const { return rank_; }
  int block_start(int b) const { return starts_[b]; }
  int block_of(int i) const { return block_of_[i]; }
  bool same_block(int i, int j) const { return block_of_[i] == block_of_[j]; }
  bool operator==(const GroupSpec& o) const { return blocks_ == o.blocks_; }

  /// e_i - e_j for i < j in a common block.
  std::vector<Weight> positive_roots() const {
    std::vector<Weight> out;
    for (int i = 0; i < rank_; ++i) {
      for (int j = i + 1; j < rank_; ++j) {
        if (!same_block(i, j)) continue;
        Weight a = Weight::zero(rank_);
        a[i] = 1;
        a[j] = -1;
        out.push_back(std::move(a));
      }
    }
    return out;
  }

  std::vector<Weight> roots() const {
    auto pos = positive_roots();
    std::vector<Weight> out = pos;
    for (const auto& a : pos) out.push_back(-a);
    return out;
  }

  std::int64_t weyl_order() const {
    std::int64_t o = 1;
    for (int b : blocks_)
      for (int k = 2; k <= b; ++k) o *= k;
    return o;
  }

  std::string describe() const {
    std::ostringstream os;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if (b) os << " x ";
      if (blocks_[b] == 1)
        os << "Gm";
      else
        os << "GL" << blocks_[b];
    }
    return os.str();
  }

 private:
  std::vector<int> blocks_;
  std::vector<int> starts_;
  std::vector<int> block_of_;
  int rank_ = 0;
};

/// Weakly decreasing within every block.
template <class V>
bool is_dominant(const GroupSpec& g, const V& x) {
  for (int i = 0; i + 1 < g.rank(); ++i) {
    if (g.same_block(i, i + 1) && x[i] < x[i + 1]) return false;
  }
  return true;
}

inline RationalWeight rho(const GroupSpec& g) {
  RationalWeight r = RationalWeight::zero(g.rank());
  for (std::size_t b = 0; b < g.blocks().size(); ++b) {
    const int n = g.blocks()[b];
    const int s = g.block_start(static_cast<int>(b));
    for (int k = 0; k < n; ++k) r[s + k] = ratio(n - 1 - 2 * k, 2);
  }
  return r;
}

/// A permutation of coordinates; (w x)[perm[i]] = x[i].
struct WeylElement {
  std::vector<int> perm;

  static WeylElement identity(int r) {
    WeylElement w;
    w.perm.resize(r);
    std::iota(w.perm.begin(), w.perm.end(), 0);
    return w;
  }
  auto operator<=>(const WeylElement&) const = default;

  bool is_identity() const {
    for (std::size_t i = 0; i < perm.size(); ++i)
      if (perm[i] != static_cast<int>(i)) return false;
    return true;
  }

  WeylElement inverse() const {
    WeylElement w;
    w.perm.resize(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) w.perm[perm[i]] = static_cast<int>(i);
    return w;
  }

  int length() const {
    int l = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++l;
    return l;
  }

  bool preserves_blocks(const GroupSpec& g) const {
    for (std::size_t i = 0; i < perm.size(); ++i)
      if (!g.same_block(static_cast<int>(i), perm[i])) return false;
    return true;
  }
};

/// act(compose(a, b), x) == act(a, act(b, x)).
inline WeylElement compose(const WeylElement& a, const WeylElement& b) {
  WeylElement w;
  w.perm.resize(b.perm.size());
  for (std::size_t i = 0; i < b.perm.size(); ++i) w.perm[i] = a.perm[b.perm[i]];
  return w;
}

template <class V>
V act(const WeylElement& w, const V& x) {
  V y = x;
  for (std::size_t i = 0; i < w.perm.size(); ++i) y[w.perm[i]] = x[i];
  return y;
}

inline std::string format_perm(const WeylElement& w) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < w.perm.size(); ++i) {
    if (i) os << ' ';
    os << w.perm[i] + 1;
  }
  os << ']';
  return os.str();
}

/// All of W, sorted by (length, permutation).
inline std::vector<WeylElement> weyl_group(const GroupSpec& g) {
  std::vector<WeylElement> out{WeylElement::identity(g.rank())};
  for (std::size_t b = 0; b < g.blocks().size(); ++b) {
    const int s = g.block_start(static_cast<int>(b));
    const int n = g.blocks()[b];
    if (n == 1) continue;
    std::vector<int> local(n);
    std::iota(local.begin(), local.end(), 0);
    std::vector<std::vector<int>> perms;
    do perms.push_back(local);
    while (std::next_permutation(local.begin(), local.end()));
    std::vector<WeylElement> next;
    next.reserve(out.size() * perms.size());
    for (const auto& w : out) {
      for (const auto& p : perms) {
        WeylElement v = w;
        for (int k = 0; k < n; ++k) v.perm[s + k] = s + p[k];
        next.push_back(std::move(v));
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
    const int la = a.length(), lb = b.length();
    return la != lb ? la < lb : a.perm < b.perm;
  });
  return out;
}

struct ShiftedDominant {
  Weight chi_plus;
  WeylElement w;
  int length = 0;
};

/// The unique w with w*chi = w(chi+rho)-rho dominant, or nothing when chi+rho is on a wall.
inline std::optional<ShiftedDominant> shifted_dominant(const GroupSpec& g, const Weight& chi) {
  const int r = g.rank();
  // Work with 2(chi+rho), which is integral.
  Coords twice(r);
  for (std::size_t b = 0; b < g.blocks().size(); ++b) {
    const int n = g.blocks()[b];
    const int s = g.block_start(static_cast<int>(b));
    for (int k = 0; k < n; ++k) twice[s + k] = 2 * chi[s + k] + (n - 1 - 2 * k);
  }
  WeylElement w = WeylElement::identity(r);
  for (std::size_t b = 0; b < g.blocks().size(); ++b) {
    const int n = g.blocks()[b];
    const int s = g.block_start(static_cast<int>(b));
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), s);
    std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) { return twice[i] > twice[j]; });
    for (int k = 0; k + 1 < n; ++k)
      if (twice[idx[k]] == twice[idx[k + 1]]) return std::nullopt;
    for (int k = 0; k < n; ++k) w.perm[idx[k]] = s + k;
  }
  const Coords moved = act(w, twice);
  Weight plus = Weight::zero(r);
  for (std::size_t b = 0; b < g.blocks().size(); ++b) {
    const int n = g.blocks()[b];
    const int s = g.block_start(static_cast<int>(b));
    for (int k = 0; k < n; ++k) plus[s + k] = (moved[s + k] - (n - 1 - 2 * k)) / 2;
  }
  return ShiftedDominant{std::move(plus), w, w.length()};
}

/// The Levi subgroup G^lambda: each block split into level sets of lambda, by decreasing value.
struct LeviDatum {
  Cocharacter lambda;
  std::vector<std::vector<int>> sub_blocks;
  std::int64_t weyl_order = 1;

  std::vector<int> sizes() const {
    std::vector<int> s;
    for (const auto& b : sub_blocks) s.push_back(static_cast<int>(b.size()));
    return s;
  }
  bool contiguous() const {
    int next = 0;
    for (const auto& b : sub_blocks)
      for (int i : b)
        if (i != next++) return false;
    return true;
  }
  /// Only meaningful for dominant lambda, where the sub-blocks are consecutive ranges.
  GroupSpec group() const {
    if (!contiguous()) throw NotDominant("Levi of a non-dominant cocharacter has no block form");
    return GroupSpec(sizes());
  }
  /// Same subgroup: equal collection of index sets.
  bool same_subgroup(const LeviDatum& o) const {
    auto a = sub_blocks, b = o.sub_blocks;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }
  std::int64_t dimension() const {
    std::int64_t d = 0;
    for (const auto& b : sub_blocks) d += static_cast<std::int64_t>(b.size() * b.size());
    return d;
  }
};

inline LeviDatum levi(const GroupSpec& g, const Cocharacter& lambda) {
  LeviDatum d;
  d.lambda = lambda;
  for (std::size_t b = 0; b < g.blocks().size(); ++b) {
    const int n = g.blocks()[b];
    const int s = g.block_start(static_cast<int>(b));
    std::map<std::int64_t, std::vector<int>, std::greater<>> levels;
    for (int k = 0; k < n; ++k) levels[lambda[s + k]].push_back(s + k);
    for (auto& [value, idx] : levels) {
      for (std::size_t k = 2; k <= idx.size(); ++k) d.weyl_order *= static_cast<std::int64_t>(k);
      d.sub_blocks.push_back(std::move(idx));
    }
  }
  return d;
}

/// W^lambda, sorted by (length, permutation).
inline std::vector<WeylElement> stabilizer(const GroupSpec& g, const Cocharacter& lambda) {
  std::vector<WeylElement> out;
  for (auto& w : weyl_group(g))
    if (act(w, lambda) == lambda) out.push_back(std::move(w));
  return out;
}

/// Minimal-length representatives of W/W^lambda in lexicographic permutation order.
inline std::vector<WeylElement> coset_reps(const GroupSpec& g, const Cocharacter& lambda) {
  std::set<Cocharacter> seen;
  std::vector<WeylElement> out;
  for (auto& w : weyl_group(g)) {
    if (seen.insert(act(w, lambda)).second) out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct DoubleCosetDatum {
  Cocharacter lambda;
  Cocharacter mu;
  WeylElement w_s;
  Cocharacter nu;
  Cocharacter nu_prime;
};

/// The double coset W^lambda w W^mu, encoded by the per-block multiset of (lambda_i, (w mu)_i).
inline std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> double_coset_key(
    const GroupSpec& g, const Cocharacter& lambda, const Cocharacter& mu, const WeylElement& w) {
  const Cocharacter wmu = act(w, mu);
  std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> key(g.blocks().size());
  for (int i = 0; i < g.rank(); ++i) key[g.block_of(i)].emplace_back(lambda[i], wmu[i]);
  for (auto& k : key) std::sort(k.begin(), k.end());
  return key;
}

namespace detail {

inline std::int64_t separation_constant(const GroupSpec& g, const Cocharacter& mu,
                                        const std::vector<Weight>& weights) {
  std::int64_t k = 0;
  std::vector<Weight> test = g.roots();
  test.insert(test.end(), weights.begin(), weights.end());
  for (int i = 0; i < g.rank(); ++i) {
    Weight e = Weight::zero(g.rank());
    e[i] = 1;
    test.push_back(e);
  }
  std::int64_t mu_norm = 0;
  for (auto x : mu.c) mu_norm = std::max<std::int64_t>(mu_norm, x < 0 ? -x : x);
  // |<w mu, beta>| <= max|mu_i| * |beta|_1 for every w in W.
  for (const auto& b : test) {
    std::int64_t l1 = 0;
    for (auto x : b.c) l1 += x < 0 ? -x : x;
    k = std::max(k, mu_norm * l1);
  }
  return k + 1;
}

}  // namespace detail

/// One datum per double coset in W^lambda \ W / W^mu, ordered by minimal representative.
/// The extra weights enlarge the refinement constant so that nu separates them too.
inline std::vector<DoubleCosetDatum> double_cosets(const GroupSpec& g, const Cocharacter& lambda,
                                                   const Cocharacter& mu,
                                                   const std::vector<Weight>& weights = {}) {
  if (!is_dominant(g, lambda) || !is_dominant(g, mu))
    throw NotDominant("double_cosets requires dominant cocharacters");
  const std::int64_t k_mu = detail::separation_constant(g, mu, weights);
  const std::int64_t k_lambda = detail::separation_constant(g, lambda, weights);
  std::set<std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>>> seen;
  std::vector<DoubleCosetDatum> out;
  for (const auto& w : weyl_group(g)) {
    if (!seen.insert(double_coset_key(g, lambda, mu, w)).second) continue;
    DoubleCosetDatum d;
    d.lambda = lambda;
    d.mu = mu;
    d.w_s = w;
    d.nu = k_mu * lambda + act(w, mu);
    d.nu_prime = k_lambda * mu + act(w.inverse(), lambda);
    if (!is_dominant(g, d.nu) || !is_dominant(g, d.nu_prime))
      throw Error("refined cocharacter is not dominant for " + format_perm(w));
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end(), [](const DoubleCosetDatum& a, const DoubleCosetDatum& b) {
    return a.w_s < b.w_s;
  });
  return out;
}

/// Index of the double coset of w among the data returned by double_cosets.
inline std::size_t double_coset_index(const GroupSpec& g, const std::vector<DoubleCosetDatum>& data,
                                      const WeylElement& w) {
  if (data.empty()) throw Error("no double cosets");
  const auto key = double_coset_key(g, data.front().lambda, data.front().mu, w);
  for (std::size_t i = 0; i < data.size(); ++i)
    if (double_coset_key(g, data[i].lambda, data[i].mu, data[i].w_s) == key) return i;
  throw Error("element lies in no enumerated double coset");
}

struct SymmetryGroup {
  Cocharacter lambda;
  std::vector<WeylElement> elements;
  std::vector<DoubleCosetDatum> cosets;

  std::size_t order() const { return elements.size(); }
};

namespace detail {

inline bool constant_on_levels(const LeviDatum& levels, const Cocharacter& x) {
  for (const auto& b : levels.sub_blocks)
    for (int i : b)
      if (x[i] != x[b.front()]) return false;
  return true;
}

}  // namespace detail

/// Permutations of equal-size Levi sub-blocks: the double cosets of (lambda, lambda) whose
/// nu' keeps the Levi of lambda. When fixed weights are supplied, elements must also keep
/// every one of them lambda-null.
inline SymmetryGroup symmetry_group(const GroupSpec& g, const Cocharacter& lambda,
                                    const std::optional<std::vector<Weight>>& fixed_weights = std::nullopt,
                                    const std::vector<Weight>& all_weights = {}) {
  const LeviDatum ld = levi(g, lambda);
  SymmetryGroup out;
  out.lambda = lambda;
  for (auto& d : double_cosets(g, lambda, lambda, all_weights)) {
    const Cocharacter back = act(d.w_s.inverse(), lambda);
    if (!detail::constant_on_levels(ld, back)) continue;
    if (fixed_weights) {
      bool keeps = true;
      for (const auto& b : *fixed_weights)
        if (pairing(back, b) != 0) keeps = false;
      if (!keeps) continue;
    }
    out.elements.push_back(d.w_s);
    out.cosets.push_back(std::move(d));
  }
  return out;
}

}  // namespace ikt
