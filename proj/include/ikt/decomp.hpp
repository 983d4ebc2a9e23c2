#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ikt/shuffle.hpp"

namespace ikt {

enum class ClassMode { fixed, levi };

inline const char* to_string(ClassMode m) { return m == ClassMode::fixed ? "fixed" : "levi"; }

struct BoundaryClass {
  Cocharacter lambda;
  LeviDatum levi;
  std::vector<Weight> fixed;
  SymmetryGroup sym;
  std::size_t face_size = 0;
};

using ClassKey = std::pair<std::vector<std::vector<int>>, std::vector<Weight>>;

/// Key of lambda up to W-conjugacy: sorted Levi index sets, plus the fixed weights in fixed mode.
inline ClassKey class_key(const LocalModel& m, const Cocharacter& lambda, ClassMode mode) {
  std::optional<ClassKey> best;
  for (const auto& w : weyl_group(m.group())) {
    const Cocharacter moved = act(w, lambda);
    auto blocks = levi(m.group(), moved).sub_blocks;
    std::sort(blocks.begin(), blocks.end());
    ClassKey key{std::move(blocks), mode == ClassMode::fixed ? fixed_weights(m.rep, moved) : std::vector<Weight>{}};
    if (!best || key < *best) best = std::move(key);
  }
  return *best;
}

/// Levi equal to G and every weight fixed.
inline bool is_trivial_cocharacter(const LocalModel& m, const Cocharacter& lambda) {
  const LeviDatum ld = levi(m.group(), lambda);
  return ld.sub_blocks.size() == m.group().blocks().size() &&
         static_cast<int>(fixed_weights(m.rep, lambda).size()) == m.rep.dimension();
}

/// Dominant cocharacters with entries in [-bound, bound].
inline std::vector<Cocharacter> dominant_box(const GroupSpec& g, int bound) {
  std::vector<Cocharacter> out;
  Cocharacter l = Cocharacter::zero(g.rank());
  std::function<void(int)> rec = [&](int i) {
    if (i == g.rank()) {
      out.push_back(l);
      return;
    }
    std::int64_t top = bound;
    if (i > 0 && g.same_block(i - 1, i)) top = std::min<std::int64_t>(top, l[i - 1]);
    for (std::int64_t x = -bound; x <= top; ++x) {
      l[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

namespace detail {

inline auto representative_order(const Cocharacter& l) {
  std::int64_t mx = 0, s = 0;
  for (auto x : l.c) {
    const std::int64_t a = x < 0 ? -x : x;
    mx = std::max(mx, a);
    s += a;
  }
  return std::make_tuple(mx, s, l);
}

}  // namespace detail

inline std::vector<BoundaryClass> boundary_classes(const LocalModel& m, int bound = 2,
                                                   ClassMode mode = ClassMode::fixed) {
  std::map<ClassKey, Cocharacter> reps;
  for (const auto& l : dominant_box(m.group(), bound)) {
    if (is_trivial_cocharacter(m, l)) continue;
    auto key = class_key(m, l, mode);
    auto it = reps.find(key);
    if (it == reps.end())
      reps.emplace(std::move(key), l);
    else if (detail::representative_order(l) < detail::representative_order(it->second))
      it->second = l;
  }
  std::vector<BoundaryClass> out;
  const auto all = m.rep.expanded();
  for (const auto& [key, l] : reps) {
    const std::size_t face = enumerate_window(fixed_locus(m, l)).size();
    if (face == 0) continue;
    BoundaryClass c;
    c.lambda = l;
    c.levi = levi(m.group(), l);
    c.fixed = fixed_weights(m.rep, l);
    c.sym = symmetry_group(m.group(), l,
                           mode == ClassMode::fixed ? std::optional<std::vector<Weight>>(c.fixed) : std::nullopt, all);
    c.face_size = face;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const BoundaryClass& a, const BoundaryClass& b) {
    const auto ka = std::make_tuple(-a.levi.dimension(), -static_cast<std::int64_t>(a.fixed.size()), a.lambda);
    const auto kb = std::make_tuple(-b.levi.dimension(), -static_cast<std::int64_t>(b.fixed.size()), b.lambda);
    return ka < kb;
  });
  return out;
}

/// Column basis in canonical echelon form.
struct Subspace {
  Matrix basis;
  std::size_t rank() const { return basis.cols(); }
};

struct DecompositionOptions {
  int bound = 2;
  ClassMode mode = ClassMode::fixed;
  Execution policy = Execution::serial;
};

struct Decomposition;

struct ClassData {
  BoundaryClass cls;
  OperatorMatrix M;      // face -> window
  OperatorMatrix Delta;  // window -> face
  Matrix Sym;            // sum of the swaps of the symmetry group, on the face
  std::shared_ptr<Decomposition> sub;
  Matrix Phi;            // Sym * e(sub) * Delta
};

struct Decomposition {
  LocalModel model;
  ClassMode mode = ClassMode::fixed;
  std::vector<Weight> window;
  std::vector<ClassData> classes;
  Subspace PK;
  Subspace BK;
  Matrix e;
  bool ranks_add = false;
  bool trivial_intersection = false;
  bool idempotent = false;
  std::string failure;

  bool ok() const { return failure.empty(); }
};

/// Sum of the swap matrices of the symmetry group acting on the face of its cocharacter.
inline Matrix symmetrizer(const LocalModel& m, const BoundaryClass& c, const std::vector<Weight>& face) {
  Matrix s(face.size(), face.size());
  for (const auto& d : c.sym.cosets) {
    const OperatorMatrix sw = matrix_swap(m, d);
    if (sw.domain != face || sw.codomain != face)
      throw FaceMismatch("symmetry element " + format_perm(d.w_s) + " does not preserve the face of " +
                         format_vector(c.lambda));
    s += sw.entries;
  }
  return s;
}

inline std::shared_ptr<Decomposition> decompose(const LocalModel& m, const DecompositionOptions& opt = {}) {
  auto dec = std::make_shared<Decomposition>();
  dec->model = m;
  dec->mode = opt.mode;
  dec->window = enumerate_window(m).weights;
  const std::size_t n = dec->window.size();
  for (auto& c : boundary_classes(m, opt.bound, opt.mode)) {
    ClassData cd;
    cd.M = matrix_m(m, c.lambda, opt.policy);
    cd.Delta = matrix_delta(m, c.lambda);
    cd.Sym = symmetrizer(m, c, cd.M.domain);
    cd.sub = decompose(fixed_locus(m, c.lambda), opt);
    if (!cd.sub->ok()) {
      dec->failure = "level " + format_vector(c.lambda) + ": " + cd.sub->failure;
      return dec;
    }
    if (cd.sub->window != cd.M.domain) throw FaceMismatch("face basis differs from the fixed-locus window");
    cd.Phi = cd.Sym * cd.sub->e * cd.Delta.entries;
    cd.cls = std::move(c);
    dec->classes.push_back(std::move(cd));
  }
  Matrix stacked(0, n);
  Matrix images(n, 0);
  for (const auto& cd : dec->classes) {
    stacked = vstack(stacked, cd.Phi);
    images = hstack(images, cd.M.entries);
  }
  dec->PK.basis = dec->classes.empty() ? Matrix::identity(n) : column_space(nullspace(stacked));
  dec->BK.basis = column_space(images);
  dec->ranks_add = dec->PK.rank() + dec->BK.rank() == n;
  dec->trivial_intersection = intersection_dimension(dec->PK.basis, dec->BK.basis) == 0;
  if (!dec->ranks_add || !dec->trivial_intersection) {
    dec->failure = "rank(PK)=" + std::to_string(dec->PK.rank()) + " rank(BK)=" + std::to_string(dec->BK.rank()) +
                   " window=" + std::to_string(n) +
                   (dec->trivial_intersection ? "" : " with PK and BK intersecting");
    return dec;
  }
  const Matrix B = hstack(dec->PK.basis, dec->BK.basis);
  Matrix diag(n, n);
  for (std::size_t i = 0; i < dec->PK.rank(); ++i) diag(i, i) = 1;
  dec->e = B * diag * inverse(B);
  dec->idempotent = dec->e * dec->e == dec->e;
  return dec;
}

struct EliminationResult {
  Matrix images;  // column j is the elimination output for the j-th window vector
  Subspace span;
  std::size_t passes = 0;
  bool consistent = true;  // every step had z proportional to Phi m z
};

/// Sweeps y := x - c m_L z with z = Phi_L x, solving c from z = c Phi_L m_L z.
inline EliminationResult eliminate(const Decomposition& dec) {
  const std::size_t n = dec.window.size();
  EliminationResult r;
  r.images = Matrix::identity(n);
  auto all_killed = [&](const Matrix& x) {
    for (const auto& cd : dec.classes)
      if (!(cd.Phi * x).is_zero()) return false;
    return true;
  };
  const std::size_t max_passes = std::max<std::size_t>(1, dec.classes.size());
  while (r.passes < max_passes && !all_killed(r.images)) {
    ++r.passes;
    for (std::size_t j = 0; j < n; ++j) {
      Matrix x(n, 1);
      for (std::size_t i = 0; i < n; ++i) x(i, 0) = r.images(i, j);
      for (const auto& cd : dec.classes) {
        const Matrix z = cd.Phi * x;
        if (z.is_zero()) continue;
        const Matrix mz = cd.M.entries * z;
        const Matrix u = cd.Phi * mz;
        std::size_t k = 0;
        while (k < u.rows() && u(k, 0) == 0) ++k;
        if (k == u.rows()) {
          r.consistent = false;
          continue;
        }
        const Rational c = z(k, 0) / u(k, 0);
        if (!(c * u == z)) r.consistent = false;
        x -= c * mz;
      }
      for (std::size_t i = 0; i < n; ++i) r.images(i, j) = x(i, 0);
    }
  }
  if (!all_killed(r.images)) r.consistent = false;
  r.span.basis = column_space(r.images);
  return r;
}

struct CompositeCheck {
  Cocharacter lambda_L;
  Cocharacter lambda_E;
  Matrix composite;
  Matrix expected;
  bool pass = false;
};

/// pi_L Delta_L m_L against (1/|W^lambda|) sum of the symmetry group, on the level-L primitive part.
inline CompositeCheck check_compequal(const Decomposition& dec, std::size_t l) {
  const ClassData& cd = dec.classes.at(l);
  CompositeCheck r;
  r.lambda_L = r.lambda_E = cd.cls.lambda;
  const Matrix P = cd.sub->PK.basis;
  r.composite = cd.sub->e * cd.Delta.entries * cd.M.entries * P;
  r.expected = Rational(1, cd.cls.levi.weyl_order) * cd.Sym * P;
  r.pass = r.composite == r.expected;
  return r;
}

/// E inside L up to conjugacy: some double coset sends lambda_L to a cocharacter constant on the
/// Levi blocks of lambda_E that also kills the lambda_E-fixed weights.
inline bool contained(const LocalModel& m, const BoundaryClass& E, const BoundaryClass& L) {
  for (const auto& d : double_cosets(m.group(), L.lambda, E.lambda, m.rep.expanded())) {
    const Cocharacter back = act(d.w_s.inverse(), L.lambda);
    if (!detail::constant_on_levels(E.levi, back)) continue;
    bool kills = true;
    for (const auto& b : E.fixed)
      if (pairing(back, b) != 0) kills = false;
    if (kills) return true;
  }
  return false;
}

/// pi_E Delta_E m_L must vanish on the level-L primitive part when E is not inside L.
inline CompositeCheck check_compdiff(const Decomposition& dec, std::size_t l, std::size_t e) {
  const ClassData& L = dec.classes.at(l);
  const ClassData& E = dec.classes.at(e);
  if (contained(dec.model, E.cls, L.cls))
    throw ContainmentHolds(format_vector(E.cls.lambda) + " is contained in " + format_vector(L.cls.lambda));
  CompositeCheck r;
  r.lambda_L = L.cls.lambda;
  r.lambda_E = E.cls.lambda;
  r.composite = E.sub->e * E.Delta.entries * L.M.entries * L.sub->PK.basis;
  r.expected = Matrix(r.composite.rows(), r.composite.cols());
  r.pass = r.composite.is_zero();
  return r;
}

struct DecoBlock {
  Matrix block;
  bool square = false;
  Rational det;
  std::vector<std::size_t> class_ranks;  // dimension of the symmetric primitive part per class
};

/// Columns: PK, then m_L applied to the symmetry-invariant part of each level-L primitive space.
inline DecoBlock deco_block(const Decomposition& dec) {
  DecoBlock r;
  r.block = dec.PK.basis;
  for (const auto& cd : dec.classes) {
    const Rational inv_order(1, static_cast<long>(cd.cls.sym.order()));
    const Matrix invariant = column_space(inv_order * cd.Sym * cd.sub->PK.basis);
    r.class_ranks.push_back(invariant.cols());
    r.block = hstack(r.block, cd.M.entries * invariant);
  }
  r.square = r.block.rows() == r.block.cols();
  r.det = r.square ? determinant(r.block) : Rational(0);
  return r;
}

/// Span of the inductions of every nontrivial dominant cocharacter in the box with a nonempty face.
inline Subspace boundary_span_all(const LocalModel& m, int bound, Execution policy = Execution::serial) {
  const std::size_t n = enumerate_window(m).size();
  Matrix images(n, 0);
  for (const auto& l : dominant_box(m.group(), bound)) {
    if (is_trivial_cocharacter(m, l)) continue;
    if (enumerate_window(fixed_locus(m, l)).size() == 0) continue;
    images = hstack(images, matrix_m(m, l, policy).entries);
  }
  return Subspace{column_space(images)};
}

}  // namespace ikt
