#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ikt/laurent.hpp"
#include "ikt/linalg.hpp"
#include "ikt/windows.hpp"

namespace ikt {

/// Exact matrix with labeled bases; entries are codomain x domain.
struct OperatorMatrix {
  std::string name;
  std::vector<Weight> domain;
  std::vector<Weight> codomain;
  Matrix entries;
};

/// a after b.
inline OperatorMatrix compose(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.domain != b.codomain) throw FaceMismatch("basis mismatch composing " + a.name + " with " + b.name);
  return {a.name + " * " + b.name, b.domain, a.codomain, a.entries * b.entries};
}

inline OperatorMatrix scaled(const Rational& k, OperatorMatrix m) {
  m.entries = k * m.entries;
  return m;
}

inline std::ptrdiff_t basis_index(const std::vector<Weight>& basis, const Weight& chi) {
  auto it = std::find(basis.begin(), basis.end(), chi);
  return it == basis.end() ? -1 : it - basis.begin();
}

/// Induction from the face of lambda into the window, column by column.
inline OperatorMatrix matrix_m(const LocalModel& m, const Cocharacter& lambda, Execution policy = Execution::serial) {
  if (!is_dominant(m.group(), lambda)) throw NotDominant("matrix_m requires a dominant cocharacter");
  const LocalModel fixed = fixed_locus(m, lambda);
  OperatorMatrix out;
  out.name = "m" + format_vector(lambda);
  out.domain = enumerate_window(fixed).weights;
  out.codomain = enumerate_window(m).weights;
  out.entries = Matrix(out.codomain.size(), out.domain.size());
  const AttractingData ad = attracting(m.rep, lambda);
  CharacterTable levi_chars(fixed.group());
  CharacterTable chars(m.group());
  for (std::size_t j = 0; j < out.domain.size(); ++j) {
    const LaurentPoly x = levi_chars(out.domain[j]);
    const LaurentPoly y = symmetrize_induction(m.group(), lambda, x, ad.A, ad.g, policy);
    for (const auto& [chi, c] : expand_in_characters(chars, y)) {
      const auto i = basis_index(out.codomain, chi);
      if (i < 0)
        throw WindowEscape("induction of " + format_vector(out.domain[j]) + " along " + format_vector(lambda) +
                           " produces " + format_vector(chi) + " outside the window");
      out.entries(i, j) = c;
    }
  }
  return out;
}

/// Restriction to the face of mu: identity on face weights, zero elsewhere.
inline OperatorMatrix matrix_delta(const LocalModel& m, const Cocharacter& mu) {
  if (!is_dominant(m.group(), mu)) throw NotDominant("matrix_delta requires a dominant cocharacter");
  OperatorMatrix out;
  out.name = "D" + format_vector(mu);
  out.domain = enumerate_window(m).weights;
  out.codomain = enumerate_window(fixed_locus(m, mu)).weights;
  out.entries = Matrix(out.codomain.size(), out.domain.size());
  for (std::size_t j = 0; j < out.domain.size(); ++j) {
    const Rational e = face_excess(m, mu, out.domain[j]);
    if (e > 0)
      throw WindowViolation("window weight " + format_vector(out.domain[j]) + " exceeds the bound of " +
                            format_vector(mu));
    if (e < 0) continue;
    const auto i = basis_index(out.codomain, out.domain[j]);
    if (i < 0) throw FaceMismatch("face weight " + format_vector(out.domain[j]) + " missing from the face basis");
    out.entries(i, j) = 1;
  }
  return out;
}

/// Sign and twist of the swap for a double coset: data of (lambda, w_s mu).
inline RelativeData swap_data(const LocalModel& m, const DoubleCosetDatum& d) {
  return relative(m.rep, d.lambda, act(d.w_s, d.mu));
}

/// chi -> (-1)^c w_s^{-1}(chi - twist), from the face of nu to the face of nu'.
inline OperatorMatrix matrix_swap(const LocalModel& m, const DoubleCosetDatum& d) {
  const RelativeData rel = swap_data(m, d);
  OperatorMatrix out;
  out.name = "sw" + format_perm(d.w_s);
  out.domain = enumerate_window(fixed_locus(m, d.nu)).weights;
  out.codomain = enumerate_window(fixed_locus(m, d.nu_prime)).weights;
  if (out.domain.size() != out.codomain.size()) throw FaceMismatch("swap between faces of different size");
  out.entries = Matrix(out.codomain.size(), out.domain.size());
  const WeylElement back = d.w_s.inverse();
  const Rational sign = (rel.c % 2 == 0) ? 1 : -1;
  for (std::size_t j = 0; j < out.domain.size(); ++j) {
    const Weight image = act(back, out.domain[j] - rel.script_N);
    const auto i = basis_index(out.codomain, image);
    if (i < 0)
      throw FaceMismatch("swap image " + format_vector(image) + " of " + format_vector(out.domain[j]) +
                         " is not in the target face basis");
    out.entries(i, j) = sign;
  }
  return out;
}

/// |W^nu| / |W^lambda| times the Levi-level induction along nu' after the swap.
inline OperatorMatrix matrix_m_twisted(const LocalModel& m, const DoubleCosetDatum& d,
                                       Execution policy = Execution::serial) {
  const LocalModel at_mu = fixed_locus(m, d.mu);
  const OperatorMatrix inner = matrix_m(at_mu, d.nu_prime, policy);
  const OperatorMatrix sw = matrix_swap(m, d);
  const Rational weight(levi(m.group(), d.nu).weyl_order, levi(m.group(), d.lambda).weyl_order);
  OperatorMatrix out = scaled(weight, compose(inner, sw));
  out.name = "mt" + format_perm(d.w_s);
  return out;
}

struct CoprResult {
  Cocharacter lambda;
  Cocharacter mu;
  Matrix lhs;
  Matrix rhs;
  Matrix residual;
  std::vector<DoubleCosetDatum> cosets;
  std::vector<Matrix> per_coset_residual;
  bool pass = false;
  bool per_coset_pass = false;
};

/// Splits Delta_mu m_lambda by grouping the subset expansion of each induced class according to
/// the double coset of the inverse of its dominating Weyl element.
inline std::vector<Matrix> copr_lhs_by_coset(const LocalModel& m, const Cocharacter& lambda, const Cocharacter& mu,
                                             const std::vector<DoubleCosetDatum>& cosets,
                                             const std::vector<Weight>& face_lambda,
                                             const std::vector<Weight>& face_mu) {
  const GroupSpec& g = m.group();
  const auto A = attracting(m.rep, lambda).A;
  if (A.size() > kMaxSubsetWeights) throw TooManyWeights("per-coset split limited by subset enumeration");
  const Rational scale(1, levi(g, lambda).weyl_order);
  std::vector<Matrix> parts(cosets.size(), Matrix(face_mu.size(), face_lambda.size()));
  for (std::size_t j = 0; j < face_lambda.size(); ++j) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << A.size()); ++mask) {
      Weight x = face_lambda[j];
      int size = 0;
      for (std::size_t i = 0; i < A.size(); ++i)
        if (mask >> i & 1) {
          x -= A[i];
          ++size;
        }
      const auto sd = shifted_dominant(g, x);
      if (!sd || face_excess(m, mu, sd->chi_plus) != 0) continue;
      const auto row = basis_index(face_mu, sd->chi_plus);
      if (row < 0) throw FaceMismatch("restricted class is missing from the face basis");
      const std::size_t s = double_coset_index(g, cosets, sd->w.inverse());
      parts[s](row, j) += ((size + sd->length) % 2 == 0 ? scale : -scale);
    }
  }
  return parts;
}

inline CoprResult check_copr(const LocalModel& m, const Cocharacter& lambda, const Cocharacter& mu,
                             Execution policy = Execution::serial) {
  CoprResult res;
  res.lambda = lambda;
  res.mu = mu;
  const OperatorMatrix M = matrix_m(m, lambda, policy);
  const OperatorMatrix D = matrix_delta(m, mu);
  const OperatorMatrix left = compose(D, M);
  res.lhs = left.entries;
  res.rhs = Matrix(left.codomain.size(), left.domain.size());
  res.cosets = double_cosets(m.group(), lambda, mu, m.rep.expanded());
  const LocalModel at_lambda = fixed_locus(m, lambda);
  std::vector<Matrix> right_parts;
  for (const auto& d : res.cosets) {
    const OperatorMatrix term = compose(matrix_m_twisted(m, d, policy), matrix_delta(at_lambda, d.nu));
    if (term.domain != left.domain || term.codomain != left.codomain)
      throw FaceMismatch("coset term has bases different from the left side");
    res.rhs += term.entries;
    right_parts.push_back(term.entries);
  }
  res.residual = res.lhs - res.rhs;
  res.pass = res.residual.is_zero();
  const auto left_parts = copr_lhs_by_coset(m, lambda, mu, res.cosets, left.domain, left.codomain);
  res.per_coset_pass = true;
  for (std::size_t s = 0; s < res.cosets.size(); ++s) {
    res.per_coset_residual.push_back(left_parts[s] - right_parts[s]);
    if (!res.per_coset_residual.back().is_zero()) res.per_coset_pass = false;
  }
  return res;
}

/// Same Levi subgroup and the same multiset of fixed weights.
inline bool same_fixed_data(const LocalModel& m, const Cocharacter& lambda, const Cocharacter& mu) {
  return levi(m.group(), lambda).same_subgroup(levi(m.group(), mu)) &&
         fixed_weights(m.rep, lambda) == fixed_weights(m.rep, mu);
}

/// Induction along an arbitrary (not necessarily dominant) cocharacter.
inline LaurentPoly induce(const LocalModel& m, const Cocharacter& lambda, const LaurentPoly& y,
                          Execution policy = Execution::serial) {
  const AttractingData ad = attracting(m.rep, lambda);
  return symmetrize_induction(m.group(), lambda, y, ad.A, ad.g, policy);
}

struct LeviEqualResult {
  LaurentPoly left;
  LaurentPoly right;
  LaurentPoly y_prime;
  bool equal = false;
};

/// m_lambda(y) against m_mu((-1)^c y q^{-twist}).
inline LeviEqualResult check_leviequal(const LocalModel& m, const Cocharacter& lambda, const Cocharacter& mu,
                                       const LaurentPoly& y) {
  if (!same_fixed_data(m, lambda, mu))
    throw DifferentLevi(format_vector(lambda) + " and " + format_vector(mu) + " have different Levi or fixed data");
  const RelativeData rel = relative(m.rep, lambda, mu);
  LeviEqualResult r;
  r.y_prime = (rel.c % 2 == 0 ? Rational(1) : Rational(-1)) * y.shifted(-rel.script_N);
  r.left = induce(m, lambda, y);
  r.right = induce(m, mu, r.y_prime);
  r.equal = r.left == r.right;
  return r;
}

/// Polynomial in h_1..h_r truncated above total degree D.
class PolyClass {
 public:
  using Exponent = std::vector<int>;

  PolyClass() = default;
  PolyClass(int rank, int degree) : rank_(rank), degree_(degree) {}

  static PolyClass one(int rank, int degree) {
    PolyClass p(rank, degree);
    p.add_term(Exponent(rank, 0), 1);
    return p;
  }
  static PolyClass monomial(const Exponent& e, int degree, const Rational& c = 1) {
    PolyClass p(static_cast<int>(e.size()), degree);
    p.add_term(e, c);
    return p;
  }
  /// h_beta = sum_i beta_i h_i, untruncated.
  static PolyClass linear(const Weight& beta, int degree) {
    PolyClass p(static_cast<int>(beta.size()), degree);
    for (std::size_t i = 0; i < beta.size(); ++i) {
      Exponent e(beta.size(), 0);
      e[i] = 1;
      p.add_term(e, beta[i]);
    }
    return p;
  }

  int rank() const { return rank_; }
  int degree() const { return degree_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const PolyClass& o) const { return terms_ == o.terms_; }

  static int total(const Exponent& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
  }

  void add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  PolyClass truncated() const {
    PolyClass out(rank_, degree_);
    for (const auto& [e, c] : terms_)
      if (total(e) <= degree_) out.terms_.emplace(e, c);
    return out;
  }

  /// Homogeneous component of the given degree.
  PolyClass component(int d) const {
    PolyClass out(rank_, degree_);
    for (const auto& [e, c] : terms_)
      if (total(e) == d) out.terms_.emplace(e, c);
    return out;
  }

  PolyClass& operator+=(const PolyClass& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  PolyClass& operator-=(const PolyClass& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend PolyClass operator+(PolyClass a, const PolyClass& b) { return a += b; }
  friend PolyClass operator-(PolyClass a, const PolyClass& b) { return a -= b; }
  friend PolyClass operator*(const Rational& k, PolyClass a) {
    if (k == 0) a.terms_.clear();
    for (auto& [e, c] : a.terms_) c *= k;
    return a;
  }
  /// Untruncated product; callers truncate when the degree bound is meant to apply.
  friend PolyClass operator*(const PolyClass& a, const PolyClass& b) {
    PolyClass out(std::max(a.rank_, b.rank_), std::max(a.degree_, b.degree_));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
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
      s += it->second.get_str() + "*h^" + format_vector(it->first);
    }
    return s;
  }

 private:
  int rank_ = 0;
  int degree_ = 0;
  std::map<Exponent, Rational> terms_;
};

inline PolyClass weyl_act(const WeylElement& w, const PolyClass& f) {
  PolyClass out(f.rank(), f.degree());
  for (const auto& [e, c] : f.terms()) out.add_term(act(w, e), c);
  return out;
}

/// Exact quotient by the linear form h_beta, dividing on the lexicographic leading variable.
inline PolyClass divide_linear(const PolyClass& f, const Weight& beta) {
  std::size_t p = 0;
  while (p < beta.size() && beta[p] == 0) ++p;
  if (p == beta.size()) throw InexactDivision("division by the zero linear form");
  const PolyClass form = PolyClass::linear(beta, f.degree());
  PolyClass rest = f;
  PolyClass q(f.rank(), f.degree());
  while (!rest.is_zero()) {
    PolyClass::Exponent e = rest.terms().rbegin()->first;
    const Rational c = rest.terms().rbegin()->second;
    if (e[p] == 0) throw InexactDivision("polynomial not divisible by h_" + format_vector(beta));
    e[p] -= 1;
    const Rational k = c / Rational(beta[p]);
    q.add_term(e, k);
    rest -= PolyClass::monomial(e, f.degree(), k) * form;
  }
  return q;
}

/// Cohomological induction: sum over W/W^lambda of
/// w((-1)^{|A|-|g|} x prod_A h_beta / prod_g h_beta), truncated at the degree of x.
inline PolyClass m_cohomology(const LocalModel& m, const Cocharacter& lambda, const PolyClass& x) {
  const GroupSpec& g = m.group();
  for (const auto& w : stabilizer(g, lambda))
    if (!(weyl_act(w, x) == x)) throw NotInvariant("cohomology input is not W^lambda-invariant");
  const AttractingData ad = attracting(m.rep, lambda);
  const int sign = ((ad.A.size() + ad.g.size()) % 2 == 0) ? 1 : -1;
  PolyClass body = x.truncated();
  for (const auto& b : ad.A) body = body * PolyClass::linear(b, x.degree());
  body = Rational(sign) * body;
  // Bring every term to the denominator prod over canonically oriented roots.
  std::vector<PolyClass> numerators;
  std::vector<std::vector<Weight>> dens;
  for (const auto& w : coset_reps(g, lambda)) {
    PolyClass num = weyl_act(w, body);
    std::vector<Weight> den;
    for (const auto& a : ad.g) {
      Weight b = act(w, a);
      if (!detail::canonical_direction(b)) {
        b = -b;
        num = Rational(-1) * num;
      }
      den.push_back(b);
    }
    std::sort(den.begin(), den.end());
    numerators.push_back(std::move(num));
    dens.push_back(std::move(den));
  }
  const auto common = detail::multiset_union(dens);
  PolyClass total(g.rank(), x.degree());
  for (std::size_t k = 0; k < numerators.size(); ++k) {
    PolyClass t = numerators[k];
    for (const auto& b : detail::multiset_difference(common, dens[k])) t = t * PolyClass::linear(b, x.degree());
    total += t;
  }
  for (const auto& b : common) total = divide_linear(total, b);
  return total.truncated();
}

struct CohomologyResult {
  PolyClass left;   // m_mu(y)
  PolyClass right;  // (-1)^c m_lambda(y)
  std::vector<bool> degree_equal;
  bool equal = false;
};

inline CohomologyResult check_cohomology(const LocalModel& m, const Cocharacter& lambda, const Cocharacter& mu,
                                         const PolyClass& y) {
  if (!same_fixed_data(m, lambda, mu))
    throw DifferentLevi(format_vector(lambda) + " and " + format_vector(mu) + " have different Levi or fixed data");
  const std::int64_t c = relative(m.rep, lambda, mu).c;
  CohomologyResult r;
  r.left = m_cohomology(m, mu, y);
  r.right = Rational(c % 2 == 0 ? 1 : -1) * m_cohomology(m, lambda, y);
  r.equal = true;
  for (int d = 0; d <= y.degree(); ++d) {
    const bool same = r.left.component(d) == r.right.component(d);
    r.degree_equal.push_back(same);
    if (!same) r.equal = false;
  }
  return r;
}

}  // namespace ikt
