#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ikt/decomp.hpp"

using namespace ikt;

namespace {

std::vector<fixtures::Named> all_models() {
  auto a = fixtures::acceptance_models();
  for (auto& n : fixtures::supplementary_models()) a.push_back(n);
  return a;
}

struct Expected {
  std::size_t window, pk, bk, classes;
};

}  // namespace

TEST(Classes, TorusSingleHasNone) { EXPECT_TRUE(boundary_classes(fixtures::torus_pm(1)).empty()); }

TEST(Classes, TorusDoubleMergesOppositeCocharacters) {
  const auto cls = boundary_classes(fixtures::torus_pm(2));
  ASSERT_EQ(cls.size(), 1u);
  EXPECT_EQ(cls[0].lambda, Cocharacter{-1});
  EXPECT_EQ(class_key(fixtures::torus_pm(2), Cocharacter{1}, ClassMode::fixed),
            class_key(fixtures::torus_pm(2), Cocharacter{-2}, ClassMode::fixed));
}

TEST(Classes, GlTwoDoubledStandardFrozen) {
  EXPECT_TRUE(boundary_classes(fixtures::std_plus_dual(2, 2)).empty());
}

TEST(Classes, StableUnderDoubledBound) {
  for (const auto& [name, m] : all_models()) {
    std::set<ClassKey> a, b;
    for (const auto& c : boundary_classes(m, 2)) a.insert(class_key(m, c.lambda, ClassMode::fixed));
    for (const auto& c : boundary_classes(m, 4)) b.insert(class_key(m, c.lambda, ClassMode::fixed));
    EXPECT_EQ(a, b) << name;
  }
}

TEST(Classes, RepresentativeIsSmallest) {
  for (const auto& [name, m] : all_models())
    for (const auto& c : boundary_classes(m, 2))
      for (const auto& l : dominant_box(m.group(), 2)) {
        if (is_trivial_cocharacter(m, l)) continue;
        if (!(class_key(m, l, ClassMode::fixed) == class_key(m, c.lambda, ClassMode::fixed))) continue;
        std::int64_t a = 0, b = 0;
        for (auto x : c.lambda.c) a = std::max<std::int64_t>(a, x < 0 ? -x : x);
        for (auto x : l.c) b = std::max<std::int64_t>(b, x < 0 ? -x : x);
        EXPECT_LE(a, b) << name;
      }
}

TEST(Decompose, FrozenRanks) {
  const std::vector<std::pair<LocalModel, Expected>> cases{
      {fixtures::torus_pm(1), {1, 1, 0, 0}},
      {fixtures::torus_pm(2), {3, 2, 1, 1}},
      {fixtures::gl2_adjoint(), {1, 0, 1, 1}},
      {fixtures::std_plus_dual(2, 2), {1, 1, 0, 0}},
      {fixtures::std_plus_dual(3, 1), {0, 0, 0, 0}},
      {fixtures::torus2_conifold(), {7, 3, 4, 4}},
      {fixtures::torus2_doubled(), {9, 4, 5, 3}},
      {fixtures::gl2_adjoint_plus_two_std(), {6, 3, 3, 3}},
      {fixtures::std_plus_dual(2, 3), {6, 3, 3, 2}},
  };
  for (const auto& [m, e] : cases) {
    const auto dec = decompose(m);
    ASSERT_TRUE(dec->ok()) << dec->failure;
    EXPECT_EQ(dec->window.size(), e.window);
    EXPECT_EQ(dec->PK.rank(), e.pk);
    EXPECT_EQ(dec->BK.rank(), e.bk);
    EXPECT_EQ(dec->classes.size(), e.classes);
  }
}

TEST(Decompose, TorusDoubleBoundaryAndProjection) {
  const auto dec = decompose(fixtures::torus_pm(2));
  Matrix v(3, 1);
  v(0, 0) = 1;
  v(1, 0) = -2;
  v(2, 0) = 1;
  EXPECT_TRUE(same_span(dec->BK.basis, v));
  EXPECT_TRUE((dec->e * v).is_zero());
  EXPECT_EQ(rank(dec->e), 2u);
  EXPECT_EQ(dec->e * dec->e, dec->e);
}

TEST(Decompose, TorusSingleProjectionIsIdentity) {
  EXPECT_EQ(decompose(fixtures::torus_pm(1))->e, Matrix::identity(1));
}

TEST(Decompose, ProjectionProperties) {
  for (const auto& [name, m] : all_models()) {
    const auto dec = decompose(m);
    ASSERT_TRUE(dec->ok()) << name << ": " << dec->failure;
    EXPECT_TRUE(dec->ranks_add) << name;
    EXPECT_TRUE(dec->trivial_intersection) << name;
    EXPECT_TRUE(dec->idempotent) << name;
    EXPECT_TRUE(same_span(column_space(dec->e), dec->PK.basis)) << name;
    EXPECT_TRUE((dec->e * dec->BK.basis).is_zero()) << name;
    EXPECT_EQ(dec->e * dec->PK.basis, dec->PK.basis) << name;
  }
}

TEST(Decompose, GenericShiftRemovesBoundary) {
  // chi + 1/10 must lie in [-1, 1], so the window is {0, -1} and neither endpoint is reached.
  LocalModel m = fixtures::torus_pm(2);
  m.delta = RationalWeight(std::vector<Rational>{Rational(1, 10)});
  const auto dec = decompose(m);
  ASSERT_TRUE(dec->ok());
  EXPECT_EQ(dec->window, (std::vector<Weight>{Weight{0}, Weight{-1}}));
  EXPECT_EQ(dec->PK.rank(), 2u);
  EXPECT_EQ(dec->BK.rank(), 0u);
  EXPECT_EQ(dec->e, Matrix::identity(2));
}

TEST(Decompose, BoundarySpanRedundancy) {
  for (const auto& [name, m] : all_models()) {
    const auto dec = decompose(m);
    EXPECT_TRUE(same_span(boundary_span_all(m, 2).basis, dec->BK.basis)) << name;
  }
  const LocalModel t = fixtures::torus_pm(2);
  const auto dec = decompose(t);
  const Matrix extra = hstack(dec->BK.basis, matrix_m(t, Cocharacter{-1}).entries);
  EXPECT_EQ(rank(extra), dec->BK.rank());
}

TEST(Decompose, DecoBlockInvertible) {
  for (const auto& [name, m] : all_models()) {
    const auto dec = decompose(m);
    const DecoBlock db = deco_block(*dec);
    EXPECT_TRUE(db.square) << name;
    EXPECT_NE(db.det, 0) << name;
  }
}

TEST(Elimination, AgreesWithKernelIntersection) {
  for (const auto& [name, m] : all_models()) {
    const auto dec = decompose(m);
    const EliminationResult el = eliminate(*dec);
    EXPECT_TRUE(el.consistent) << name;
    EXPECT_LE(el.passes, std::max<std::size_t>(1, dec->classes.size())) << name;
    EXPECT_TRUE(same_span(el.span.basis, dec->PK.basis)) << name;
  }
}

TEST(Composites, DiagonalOnTorusIsIdentity) {
  const auto dec = decompose(fixtures::torus_pm(2));
  const auto c = check_compequal(*dec, 0);
  EXPECT_TRUE(c.pass);
  EXPECT_EQ(c.composite, Matrix::identity(1));
}

TEST(Composites, DiagonalEverywhere) {
  for (const auto& [name, m] : all_models()) {
    const auto dec = decompose(m);
    for (std::size_t l = 0; l < dec->classes.size(); ++l) EXPECT_TRUE(check_compequal(*dec, l).pass) << name;
  }
}

TEST(Composites, CrossTermsVanishOutsideContainment) {
  std::size_t checked = 0;
  for (const auto& [name, m] : all_models()) {
    const auto dec = decompose(m);
    for (std::size_t l = 0; l < dec->classes.size(); ++l)
      for (std::size_t e = 0; e < dec->classes.size(); ++e) {
        if (e == l) continue;
        if (contained(m, dec->classes[e].cls, dec->classes[l].cls)) {
          EXPECT_THROW(check_compdiff(*dec, l, e), ContainmentHolds);
          continue;
        }
        EXPECT_TRUE(check_compdiff(*dec, l, e).pass) << name;
        ++checked;
      }
  }
  EXPECT_GT(checked, 0u);
}

TEST(Modes, LeviModeAgreesOnAcceptanceRepresentations) {
  for (const auto& [name, m] : fixtures::acceptance_models()) {
    const auto a = decompose(m, {2, ClassMode::fixed});
    const auto b = decompose(m, {2, ClassMode::levi});
    ASSERT_TRUE(b->ok()) << name;
    EXPECT_TRUE(same_span(a->PK.basis, b->PK.basis)) << name;
    EXPECT_TRUE(same_span(a->BK.basis, b->BK.basis)) << name;
  }
}

TEST(Modes, ParallelDecompositionIdentical) {
  for (const auto& [name, m] : all_models()) {
    const auto a = decompose(m, {2, ClassMode::fixed, Execution::serial});
    const auto b = decompose(m, {2, ClassMode::fixed, Execution::parallel});
    EXPECT_EQ(a->e, b->e) << name;
    EXPECT_EQ(a->PK.basis, b->PK.basis) << name;
  }
}
