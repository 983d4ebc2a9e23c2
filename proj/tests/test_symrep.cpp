#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ikt/symrep.hpp"

using namespace ikt;

TEST(SymmetricRep, SymmetryCheck) {
  EXPECT_TRUE(check_symmetric(SymmetricRep(GroupSpec({1}), {{Weight{1}, 1}, {Weight{-1}, 1}})));
  EXPECT_FALSE(check_symmetric(SymmetricRep(GroupSpec({1}), {{Weight{1}, 2}, {Weight{-1}, 1}})));
  EXPECT_TRUE(check_symmetric(fixtures::gl2_adjoint().rep));
}

TEST(SymmetricRep, LengthMismatchNamesEntry) {
  try {
    SymmetricRep(GroupSpec({2}), {{Weight{1, 0}, 1}, {Weight{1}, 1}});
    FAIL() << "expected an input error";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("1"), std::string::npos);
  }
}

TEST(SymmetricRep, MergesRepeatedWeights) {
  const SymmetricRep v(GroupSpec({1}), {{Weight{1}, 1}, {Weight{1}, 1}, {Weight{-1}, 2}});
  EXPECT_EQ(v.multiplicity(Weight{1}), 2);
  EXPECT_EQ(v.dimension(), 4);
}

TEST(Attracting, TorusSingle) {
  const auto ad = attracting(fixtures::torus_pm(1).rep, Cocharacter{1});
  EXPECT_EQ(ad.A, (std::vector<Weight>{Weight{1}}));
  EXPECT_TRUE(ad.g.empty());
  EXPECT_EQ(ad.n, 1);
  EXPECT_EQ(ad.b, Rational(1, 2));
}

TEST(Attracting, AdjointCancels) {
  const auto ad = attracting(fixtures::gl2_adjoint().rep, Cocharacter{1, 0});
  EXPECT_EQ(ad.A, (std::vector<Weight>{Weight{1, -1}}));
  EXPECT_EQ(ad.g, (std::vector<Weight>{Weight{1, -1}}));
  EXPECT_EQ(ad.n, 0);
}

TEST(Attracting, ZeroCocharacter) {
  const auto ad = attracting(fixtures::std_plus_dual(3, 1).rep, Cocharacter{0, 0, 0});
  EXPECT_TRUE(ad.A.empty());
  EXPECT_EQ(ad.n, 0);
}

TEST(Relative, SameCocharacterIsEmpty) {
  const auto d = relative(fixtures::torus2_conifold().rep, Cocharacter{1, 2}, Cocharacter{1, 2});
  EXPECT_TRUE(d.I.empty());
  EXPECT_TRUE(d.J.empty());
  EXPECT_EQ(d.c, 0);
  EXPECT_TRUE(d.script_N.is_zero());
}

TEST(Relative, TorusOpposite) {
  const auto d = relative(fixtures::torus_pm(2).rep, Cocharacter{1}, Cocharacter{-1});
  EXPECT_EQ(d.I, (std::vector<Weight>{Weight{1}, Weight{1}}));
  EXPECT_EQ(d.d, 2);
  EXPECT_EQ(d.e, 0);
  EXPECT_EQ(d.c, 2);
  EXPECT_EQ(d.N, Weight{2});
  EXPECT_EQ(d.script_N, Weight{2});
}

TEST(Relative, AdjointSwap) {
  const auto d = relative(fixtures::gl2_adjoint().rep, Cocharacter{1, 0}, Cocharacter{0, 1});
  EXPECT_EQ(d.I, (std::vector<Weight>{Weight{1, -1}}));
  EXPECT_EQ(d.J, (std::vector<Weight>{Weight{1, -1}}));
  EXPECT_EQ(d.c, 0);
  EXPECT_TRUE(d.script_N.is_zero());
}

TEST(FixedLocus, LeviWeightsAndShift) {
  const LocalModel m = fixtures::std_plus_dual(2, 2);
  const LocalModel f = fixed_locus(m, Cocharacter{1, 0});
  EXPECT_EQ(f.group().blocks(), (std::vector<int>{1, 1}));
  EXPECT_EQ(f.rep.multiplicity(Weight{0, 1}), 2);
  EXPECT_EQ(f.rep.multiplicity(Weight{1, 0}), 0);
  // delta' = -1/2 (2 e1) + 1/2 (e1 - e2)
  EXPECT_EQ(f.delta, RationalWeight(std::vector<Rational>{Rational(-1, 2), Rational(-1, 2)}));
}

TEST(FixedLocus, RequiresDominant) {
  EXPECT_THROW(fixed_locus(fixtures::gl2_adjoint(), Cocharacter{0, 1}), NotDominant);
}

TEST(FaceExcess, TorusDouble) {
  const LocalModel m = fixtures::torus_pm(2);
  EXPECT_EQ(face_excess(m, Cocharacter{1}, Weight{1}), 0);
  EXPECT_EQ(face_excess(m, Cocharacter{1}, Weight{0}), -1);
  EXPECT_EQ(face_excess(m, Cocharacter{-1}, Weight{-1}), 0);
}
