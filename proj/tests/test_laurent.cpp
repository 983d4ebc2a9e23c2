#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "ikt/laurent.hpp"
#include "oracles.hpp"

using namespace ikt;

namespace {

LaurentPoly from_oracle(int rank, const oracle::Poly& p) {
  LaurentPoly f(rank);
  for (const auto& [e, c] : p) f.add_term(e, Rational(static_cast<long>(c)));
  return f;
}

LaurentPoly q(std::initializer_list<std::int64_t> e, Rational c = 1) { return LaurentPoly::monomial(Weight(e), c); }

std::vector<Weight> dominant_weights(const GroupSpec& g, int bound) {
  std::vector<Weight> out;
  Weight w = Weight::zero(g.rank());
  std::function<void(int)> rec = [&](int i) {
    if (i == g.rank()) {
      if (is_dominant(g, w)) out.push_back(w);
      return;
    }
    for (int x = -bound; x <= bound; ++x) {
      w[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

TEST(LaurentPoly, ArithmeticAndCancellation) {
  const LaurentPoly a = q({1}) - q({0});
  const LaurentPoly b = q({1}) + q({0});
  EXPECT_EQ(a * b, q({2}) - q({0}));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(LaurentPoly::one_minus_inverse(Weight{1}), q({0}) - q({-1}));
}

TEST(WeylAct, IdentityAndSwap) {
  const GroupSpec g({2});
  const auto w = weyl_group(g);
  EXPECT_EQ(weyl_act(w[0], q({1, 0})), q({1, 0}));
  EXPECT_EQ(weyl_act(w[1], q({1, 0})), q({0, 1}));
}

TEST(Division, ExactQuotientRecovered) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    LaurentPoly f(2);
    for (int k = 0; k < 4; ++k) f.add_term(Coords{d(rng), d(rng)}, Rational(d(rng)));
    const Weight beta{d(rng), d(rng)};
    if (beta.is_zero()) continue;
    const LaurentPoly prod = f * LaurentPoly::one_minus_inverse(beta);
    EXPECT_EQ(divide_one_minus_inverse(prod, beta), f);
  }
}

TEST(Division, InexactThrows) {
  EXPECT_THROW(divide_one_minus_inverse(q({0}), Weight{1}), InexactDivision);
}

TEST(Symmetrize, TorusUnchanged) {
  const LaurentPoly y = q({2, -1}) + q({0, 3}, 5);
  EXPECT_EQ(symmetrize_full(GroupSpec({1, 1}), y), y);
}

TEST(Symmetrize, TwoByTwoExamples) {
  const GroupSpec g({2});
  EXPECT_EQ(symmetrize_full(g, q({1, 0})), q({1, 0}) + q({0, 1}));
  EXPECT_EQ(symmetrize_full(g, q({0, 0})), q({0, 0}));
}

TEST(WeylCharacter, MatchesSemistandardTableaux) {
  for (const auto& blocks : std::vector<std::vector<int>>{{2}, {3}, {1, 2}, {2, 2}, {4}}) {
    const GroupSpec g(blocks);
    for (const auto& chi : dominant_weights(g, blocks == std::vector<int>{4} ? 1 : 2)) {
      const LaurentPoly expected = from_oracle(g.rank(), oracle::irreducible_character(blocks, chi.c));
      const LaurentPoly got = weyl_character(g, chi);
      ASSERT_EQ(got, expected) << format_vector(chi);
      Rational dim = 0;
      for (const auto& [e, c] : got.terms()) dim += c;
      EXPECT_EQ(dim, oracle::weyl_dimension(blocks, chi.c));
    }
  }
}

TEST(Expand, RoundTripAndSquare) {
  const GroupSpec g({2});
  const auto one = expand_in_characters(g, weyl_character(g, Weight{1, 0}));
  EXPECT_EQ(one, (CharacterCombination{{Weight{1, 0}, 1}}));
  const LaurentPoly s = q({1, 0}) + q({0, 1});
  EXPECT_EQ(expand_in_characters(g, s * s), (CharacterCombination{{Weight{2, 0}, 1}, {Weight{1, 1}, 1}}));
  EXPECT_TRUE(expand_in_characters(g, LaurentPoly(2)).empty());
}

TEST(Expand, InverseOfCharacterSum) {
  const GroupSpec g({3});
  CharacterCombination combo{{Weight{2, 0, -1}, 3}, {Weight{1, 1, 0}, -2}, {Weight{0, 0, 0}, Rational(1, 2)}};
  LaurentPoly f(3);
  for (const auto& [chi, c] : combo) f += c * from_oracle(3, oracle::irreducible_character({3}, chi.c));
  EXPECT_EQ(expand_in_characters(g, f), combo);
}

TEST(Expand, RejectsNonInvariant) { EXPECT_THROW(expand_in_characters(GroupSpec({2}), q({1, 0})), NotInvariant); }

TEST(Induction, ZeroCocharacterDividesByGroupOrder) {
  const GroupSpec g({2});
  const LaurentPoly x = weyl_character(g, Weight{1, 0});
  EXPECT_EQ(symmetrize_induction(g, Cocharacter{0, 0}, x, {}, {}), Rational(1, 2) * x);
  const GroupSpec t({1});
  EXPECT_EQ(symmetrize_induction(t, Cocharacter{0}, q({3}), {}, {}), q({3}));
}

TEST(Induction, TorusDoubleExample) {
  const auto ad = attracting(fixtures::torus_pm(2).rep, Cocharacter{1});
  const LaurentPoly got = symmetrize_induction(GroupSpec({1}), Cocharacter{1}, q({1}), ad.A, ad.g);
  EXPECT_EQ(got, q({1}) - q({0}, 2) + q({-1}));
}

TEST(Induction, RejectsNonInvariantInput) {
  const GroupSpec g({2});
  EXPECT_THROW(symmetrize_induction(g, Cocharacter{0, 0}, q({1, 0}), {}, {}), NotInvariant);
}

TEST(Induction, SerialAndParallelIdentical) {
  const LocalModel m = fixtures::std_plus_dual(3, 2);
  const GroupSpec& g = m.group();
  for (const auto& l : std::vector<Cocharacter>{{1, 0, 0}, {1, 1, 0}, {2, 1, 0}, {0, 0, -1}}) {
    const auto ad = attracting(m.rep, l);
    const LaurentPoly x = weyl_character(levi(g, l).group(), Weight{1, 0, -1});
    EXPECT_EQ(symmetrize_induction(g, l, x, ad.A, ad.g, Execution::serial),
              symmetrize_induction(g, l, x, ad.A, ad.g, Execution::parallel));
  }
}

TEST(Bbw, NoNegativeWeightsGivesCharacter) {
  const SymmetricRep v(GroupSpec({2}), std::vector<std::pair<Weight, int>>{});
  EXPECT_EQ(bbw_pushforward(v, Cocharacter{1, 0}, Weight{2, 0}), (CharacterCombination{{Weight{2, 0}, 1}}));
}

TEST(Bbw, AgreesWithInductionOnSupplementaryFaces) {
  for (const auto& [name, m] : fixtures::supplementary_models()) {
    const GroupSpec& g = m.group();
    for (const auto& l : dominant_weights(g, 1)) {
      const Cocharacter lambda(l.c);
      const LeviDatum ld = levi(g, lambda);
      const auto ad = attracting(m.rep, lambda);
      if (ad.A.size() > kMaxSubsetWeights) continue;
      for (const auto& chi : dominant_weights(ld.group(), 1)) {
        const auto induced =
            expand_in_characters(g, symmetrize_induction(g, lambda, weyl_character(ld.group(), chi), ad.A, ad.g));
        CharacterCombination expected;
        for (const auto& [w, c] : bbw_pushforward(m.rep, -lambda, chi)) accumulate(expected, w, c / ld.weyl_order);
        EXPECT_EQ(induced, expected) << name << " " << format_vector(lambda) << " " << format_vector(chi);
      }
    }
  }
}
