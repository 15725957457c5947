#include "waring/apolarity.hpp"
#include "waring/classifier.hpp"
#include "waring/degeneracy.hpp"
#include "waring/generators.hpp"
#include "waring/io.hpp"

#include <gtest/gtest.h>

using namespace waring;

namespace {

Polynomial y(std::size_t i) { return Polynomial::variable(Variable::y(i)); }

const TernaryQuartic kCapolary = parse_quartic_text("x0^4+x1^4+x2^4+(x0+x1+x2)^4");

} // namespace

TEST(Catalecticant, Shapes) {
  const TernaryQuartic f = random_quartic(1);
  const std::array<std::pair<std::size_t, std::size_t>, 5> shapes{{{1, 15}, {3, 10}, {6, 6}, {10, 3}, {15, 1}}};
  for (int k = 0; k <= 4; ++k) {
    const auto c = catalecticant(f, k);
    EXPECT_EQ(c.entries.rows(), shapes[static_cast<std::size_t>(k)].first);
    EXPECT_EQ(c.entries.cols(), shapes[static_cast<std::size_t>(k)].second);
  }
  EXPECT_THROW(catalecticant(f, -1), std::invalid_argument);
  EXPECT_THROW(catalecticant(f, 5), std::invalid_argument);
}

TEST(Catalecticant, SinglePower) {
  const auto c = catalecticant(parse_quartic_text("x0^4"), 2);
  std::size_t nonzero = 0;
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t s = 0; s < 6; ++s) nonzero += c.entries(r, s) != 0;
  EXPECT_EQ(nonzero, 1u);
  EXPECT_EQ(c.entries(0, 0), 1);
  EXPECT_EQ(rank(c.entries), 1u);
}

TEST(Catalecticant, HankelSymmetryAndDuality) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const TernaryQuartic f = random_quartic(10 + seed);
    const auto c2 = catalecticant(f, 2);
    EXPECT_EQ(c2.entries, c2.entries.transpose());
    for (int k = 0; k <= 4; ++k) EXPECT_EQ(catalecticant(f, k).entries, catalecticant(f, 4 - k).entries.transpose());
    const auto c1 = catalecticant(f, 1);
    for (std::size_t r = 0; r < c1.entries.rows(); ++r)
      for (std::size_t s = 0; s < c1.entries.cols(); ++s)
        EXPECT_EQ(c1.entries(r, s), f.normalized(monomial_position(c1.row_indices()[r] + c1.col_indices()[s])));
  }
}

TEST(Catalecticant, SampleRanks) {
  const auto clebsch = catalecticant(clebsch_sample(), 2);
  EXPECT_EQ(rank(clebsch.entries), 5u);
  EXPECT_EQ(determinant(clebsch.entries), 0);
  EXPECT_EQ(rank(catalecticant(random_quartic(42), 2).entries), 6u);
}

TEST(RankProfile, Examples) {
  EXPECT_EQ(rank_profile(parse_quartic_text("x0^4")).ranks, (std::array<std::size_t, 3>{1, 1, 1}));
  EXPECT_EQ(rank_profile(parse_quartic_text("x0^4+x1^4")).rank(1), 2u);
  EXPECT_EQ(rank_profile(kCapolary).rank(2), 4u);
  EXPECT_THROW(rank_profile(TernaryQuartic{}), std::invalid_argument);
}

TEST(RankProfile, PowerSumBound) {
  for (int s = 1; s <= 5; ++s)
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const RankProfile p = rank_profile(random_in_Ws(s, seed));
      for (int k = 1; k <= 3; ++k) EXPECT_LE(p.rank(k), static_cast<std::size_t>(s)) << "s=" << s << " seed=" << seed;
      EXPECT_EQ(p.rank(1), p.rank(3));
    }
}

TEST(ApolarForms, Examples) {
  const auto lin = apolar_forms(parse_quartic_text("x0^4"), 1);
  ASSERT_EQ(lin.size(), 2u);
  EXPECT_EQ(lin[0], y(1));
  EXPECT_EQ(lin[1], y(2));
  EXPECT_TRUE(apolar_forms(random_quartic(7), 2).empty());
  const auto conics = apolar_forms(kCapolary, 2);
  EXPECT_EQ(conics.size(), 2u);
  for (const auto& g : conics) {
    EXPECT_TRUE(g.is_homogeneous(VarClass::y, 2));
    EXPECT_TRUE(annihilates(g, kCapolary));
  }
  EXPECT_THROW(apolar_forms(kCapolary, 0), std::invalid_argument);
  EXPECT_THROW(apolar_forms(TernaryQuartic{}, 2), std::invalid_argument);
}

TEST(ApolarForms, KernelDimensionMatchesRank) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const TernaryQuartic f = random_in_Ws(3, seed);
    for (int k = 1; k <= 4; ++k) {
      const auto forms = apolar_forms(f, k);
      EXPECT_EQ(forms.size() + rank(catalecticant(f, k).entries), monomials_of_degree(k).size());
      for (const auto& g : forms) EXPECT_TRUE(annihilates(g, f));
    }
  }
}

TEST(Annihilates, Examples) {
  const TernaryQuartic x4 = parse_quartic_text("x0^4");
  EXPECT_TRUE(annihilates(y(1), x4));
  EXPECT_FALSE(annihilates(y(0), x4));
  EXPECT_FALSE(annihilates(y(0).pow(4), x4));
  EXPECT_TRUE(annihilates(y(0).pow(2) * y(1), x4));
  EXPECT_THROW(annihilates(y(0) + y(1).pow(2), x4), std::invalid_argument);
  EXPECT_THROW(annihilates(y(0).pow(5), x4), std::invalid_argument);
  EXPECT_THROW(annihilates(Polynomial::variable(Variable::x(0)), x4), std::invalid_argument);
}

TEST(Reye, Examples) {
  const std::vector<LinearForm> point{{1, 0, 0}};
  EXPECT_TRUE(reye_check(point, parse_quartic_text("x0^4")));
  EXPECT_FALSE(reye_check(point, parse_quartic_text("x1^4")));
  const PowerSumSample z = random_power_sum(3, 17);
  EXPECT_TRUE(reye_check(z.summands, z.form));
  const TernaryQuartic span = power_sum(std::vector<LinearForm>{z.summands[0]}) * make_rational(3, 2) +
                              power_sum(std::vector<LinearForm>{z.summands[2]}) * Rational(-5);
  EXPECT_TRUE(reye_check(z.summands, span));
  EXPECT_FALSE(reye_check(z.summands, random_quartic(17)));
}

TEST(Reye, IdealDegreeFourVanishesAtPoints) {
  const PowerSumSample z = random_power_sum(4, 23);
  const auto ideal = ideal_degree4(z.summands);
  EXPECT_EQ(ideal.size(), 15u - 4u);
  for (const auto& g : ideal)
    for (const auto& l : z.summands) {
      std::map<Variable, Rational> at;
      for (std::size_t i = 0; i < 3; ++i) at[Variable::y(i)] = l[i];
      EXPECT_EQ(g.evaluate(at), 0);
    }
}

TEST(Reye, Errors) {
  const std::vector<LinearForm> dup{{1, 2, 3}, {2, 4, 6}};
  EXPECT_THROW(reye_check(dup, random_quartic(1)), std::invalid_argument);
  EXPECT_THROW(reye_check(std::vector<LinearForm>{}, random_quartic(1)), std::invalid_argument);
  EXPECT_THROW(LinearForm(0, 0, 0), std::invalid_argument);
}

TEST(Degeneracy, WaringDegrees) {
  EXPECT_EQ(degree_of_Ws(3), 112);
  EXPECT_EQ(degree_of_Ws(4), 35);
  EXPECT_EQ(degree_of_Ws(5), 6);
}

TEST(Degeneracy, ChernSeries) {
  const auto z = waring_chern_series();
  ASSERT_EQ(z.size(), 7u);
  EXPECT_EQ(z[0], 1);
  EXPECT_EQ(z[1], 3);
  EXPECT_EQ(z[2], make_rational(15, 4));
  EXPECT_EQ(z[6], make_rational(1, 64));
}

TEST(Degeneracy, Codimension) {
  EXPECT_EQ(expected_codimension(6, 5), 1);
  EXPECT_EQ(expected_codimension(6, 4), 3);
  EXPECT_EQ(expected_codimension(6, 3), 6);
  EXPECT_EQ(expected_codimension(6, 0), 21);
}

TEST(Degeneracy, SmallCases) {
  // Rank <= e-1 is the determinant: degree 2 * z_1.
  EXPECT_EQ(degeneracy_degree(2, 1, {1, 3, 2}), 6);
  EXPECT_EQ(degeneracy_degree(1, 0, {1, 5}), 10);
}

TEST(Degeneracy, Errors) {
  const auto z = waring_chern_series();
  EXPECT_THROW(degeneracy_degree(6, 6, z), std::invalid_argument);
  EXPECT_THROW(degeneracy_degree(6, -1, z), std::invalid_argument);
  EXPECT_THROW(degeneracy_degree(6, 3, {1, 2}), std::invalid_argument);
  EXPECT_THROW(degeneracy_degree(2, 1, {2, 1, 1}), std::invalid_argument);
  EXPECT_THROW(degeneracy_degree(2, 1, {1, make_rational(1, 4), 0}), std::domain_error);
}
