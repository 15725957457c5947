#include "waring/matrix.hpp"
#include "waring/multi_index.hpp"
#include "waring/polynomial.hpp"
#include "waring/quartic.hpp"
#include "waring/rational.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace waring;

namespace {

Polynomial x(std::size_t i) { return Polynomial::variable(Variable::x(i)); }
Polynomial u(std::size_t i) { return Polynomial::variable(Variable::u(i)); }

Polynomial random_polynomial(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coef(-5, 5);
  std::uniform_int_distribution<unsigned> exp(0, 2);
  Polynomial p;
  for (int t = 0; t < 4; ++t) {
    Monomial m;
    m.set(Variable::x(0).slot(), exp(rng));
    m.set(Variable::x(1).slot(), exp(rng));
    m.set(Variable::u(2).slot(), exp(rng));
    p += Polynomial::monomial(m, make_rational(coef(rng), 1 + std::abs(coef(rng))));
  }
  return p;
}

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long h = 4) {
  std::uniform_int_distribution<long> coef(-h, h);
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = coef(rng);
  return m;
}

} // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(make_rational(6, -4), make_rational(-3, 2));
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
  EXPECT_EQ(to_string(Rational(7)), "7");
  EXPECT_THROW(make_rational(1, 0), std::invalid_argument);
}

TEST(Rational, ParseRoundTrip) {
  EXPECT_EQ(parse_rational("3/6"), make_rational(1, 2));
  EXPECT_EQ(parse_rational("-12"), Rational(-12));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1 / 2"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  const Rational big = parse_rational("123456789012345678901234567890/7");
  EXPECT_EQ(parse_rational(to_string(big)), big);
}

TEST(Rational, Factorial) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(6), 720);
  EXPECT_EQ(factorial(25).get_str(), "15511210043330985984000000");
}

TEST(MultiIndex, OrderingAndPositions) {
  const auto deg2 = monomials_of_degree(2);
  ASSERT_EQ(deg2.size(), 6u);
  EXPECT_EQ(deg2[0], (MultiIndex{2, 0, 0}));
  EXPECT_EQ(deg2[1], (MultiIndex{1, 1, 0}));
  EXPECT_EQ(deg2[5], (MultiIndex{0, 0, 2}));
  EXPECT_EQ(monomials_of_degree(4).size(), 15u);
  EXPECT_EQ(monomials_of_degree(6).size(), 28u);
  for (int d = 0; d <= 6; ++d) {
    const auto all = monomials_of_degree(d);
    for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(monomial_position(all[i]), i);
  }
}

TEST(MultiIndex, Parse) {
  EXPECT_EQ(parse_multi_index("(2, 1,1)"), (MultiIndex{2, 1, 1}));
  EXPECT_THROW(parse_multi_index("(2,1)"), std::invalid_argument);
  EXPECT_THROW(parse_multi_index("2,1,1"), std::invalid_argument);
  EXPECT_EQ((MultiIndex{2, 1, 1}).factorial_product(), 2);
}

TEST(Polynomial, MultinomialCoefficient) {
  const Polynomial p = (x(0) + x(1) + x(2)).pow(4);
  Monomial m;
  m.set(Variable::x(0).slot(), 2);
  m.set(Variable::x(1).slot(), 1);
  m.set(Variable::x(2).slot(), 1);
  EXPECT_EQ(p.coefficient(m), 12);
  EXPECT_EQ(p.size(), 15u);
  EXPECT_TRUE(p.is_homogeneous(VarClass::x, 4));
}

TEST(Polynomial, CancellationLeavesNoZeroTerms) {
  const Polynomial p = (x(0) + x(1)) * (x(0) - x(1));
  EXPECT_EQ(p, x(0).pow(2) - x(1).pow(2));
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).to_string(), "0");
}

TEST(Polynomial, RingAxiomsOnRandomTriples) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const Polynomial a = random_polynomial(rng), b = random_polynomial(rng), c = random_polynomial(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Polynomial());
    EXPECT_EQ(a * Polynomial(1), a);
  }
}

TEST(Polynomial, SubstitutionCommutesWithEvaluation) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial p = random_polynomial(rng);
    const Polynomial q = x(1) * Rational(2) - u(2);
    const Polynomial sub = p.substitute({{Variable::x(0), q}});
    const std::map<Variable, Rational> point{{Variable::x(1), make_rational(3, 2)}, {Variable::u(2), Rational(-2)}};
    std::map<Variable, Rational> lifted = point;
    lifted[Variable::x(0)] = q.evaluate(point);
    EXPECT_EQ(sub.evaluate(point), p.evaluate(lifted));
  }
}

TEST(Polynomial, Derivative) {
  const Polynomial p = x(0).pow(3) * x(1) + x(2) * Rational(5);
  EXPECT_EQ(p.derivative(Variable::x(0)), x(0).pow(2) * x(1) * Rational(3));
  EXPECT_EQ(p.derivative(Variable::x(2)), Polynomial(5));
  EXPECT_TRUE(p.derivative(Variable::u(0)).is_zero());
}

TEST(Polynomial, HomogeneityAndClasses) {
  const Polynomial p = x(0) * u(1) + x(2) * u(2);
  EXPECT_TRUE(p.is_homogeneous(VarClass::x, 1));
  EXPECT_TRUE(p.is_homogeneous(VarClass::u, 1));
  EXPECT_FALSE(p.is_homogeneous(VarClass::x, 2));
  EXPECT_TRUE(p.uses_only({VarClass::x, VarClass::u}));
  EXPECT_FALSE(p.uses_only({VarClass::x}));
  EXPECT_EQ((x(0) + x(1).pow(3)).max_degree(VarClass::x), 3u);
  EXPECT_EQ((x(0) + x(1).pow(3)).min_degree(VarClass::x), 1u);
}

TEST(Polynomial, ExponentOverflowThrows) {
  EXPECT_THROW(x(0).pow(200) * x(0).pow(100), std::overflow_error);
}

TEST(Matrix, RankExamples) {
  EXPECT_EQ(rank(RationalMatrix::identity(4)), 4u);
  EXPECT_EQ(rank(RationalMatrix(3, 5)), 0u);
  const RationalMatrix m = RationalMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  EXPECT_EQ(rank(m), 2u);
  EXPECT_EQ(determinant(m), 0);
}

TEST(Matrix, DeterminantExamples) {
  EXPECT_EQ(determinant(RationalMatrix::from_rows({{2, 1}, {1, 3}})), 5);
  const RationalMatrix v = RationalMatrix::from_rows({{1, 1, 1}, {1, 2, 4}, {1, 3, 9}});
  EXPECT_EQ(determinant(v), 2);
  RationalMatrix h(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) h(i, j) = make_rational(1, static_cast<long>(i + j + 1));
  EXPECT_EQ(determinant(h), make_rational(1, 6048000));
  EXPECT_THROW(determinant(RationalMatrix(2, 3)), std::invalid_argument);
}

TEST(Matrix, KernelExample) {
  const RationalMatrix m = RationalMatrix::from_rows({{1, 2, 3}, {2, 4, 6}});
  const auto k = kernel(m);
  ASSERT_EQ(k.size(), 2u);
  for (const auto& v : k)
    for (const auto& entry : m * v) EXPECT_EQ(entry, 0);
}

TEST(Matrix, RankNullityAndTransposeOnRandomMatrices) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> dim(1, 7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = dim(rng), cols = dim(rng);
    RationalMatrix m = random_matrix(rng, rows, cols, 1);
    const std::size_t r = rank(m);
    EXPECT_EQ(r, rank(m.transpose()));
    const auto k = kernel(m);
    EXPECT_EQ(r + k.size(), cols);
    for (const auto& v : k)
      for (const auto& entry : m * v) EXPECT_EQ(entry, 0);
  }
}

TEST(Matrix, DeterminantIsMultiplicative) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const RationalMatrix a = random_matrix(rng, 5, 5), b = random_matrix(rng, 5, 5);
    EXPECT_EQ(determinant(a * b), determinant(a) * determinant(b));
    EXPECT_EQ(determinant(a), determinant(a.transpose()));
  }
}

TEST(Matrix, EqualRowsGiveZeroDeterminant) {
  std::mt19937_64 rng(9);
  RationalMatrix a = random_matrix(rng, 4, 4);
  for (std::size_t c = 0; c < 4; ++c) a(3, c) = a(1, c);
  EXPECT_EQ(determinant(a), 0);
  EXPECT_LT(rank(a), 4u);
}

TEST(Matrix, PolynomialDeterminantMatchesNumeric) {
  std::mt19937_64 rng(13);
  const RationalMatrix a = random_matrix(rng, 4, 4);
  std::vector<std::vector<Polynomial>> p(4, std::vector<Polynomial>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) p[i][j] = Polynomial(a(i, j));
  EXPECT_EQ(determinant(p), Polynomial(determinant(a)));
  const std::vector<std::vector<Polynomial>> sym{{x(0), x(1)}, {x(1), x(2)}};
  EXPECT_EQ(determinant(sym), x(0) * x(2) - x(1).pow(2));
}

TEST(Quartic, NormalizedCoefficients) {
  const TernaryQuartic f = TernaryQuartic::from_polynomial((x(0) + x(1) + x(2)).pow(4));
  for (std::size_t i = 0; i < TernaryQuartic::kNumCoefficients; ++i) EXPECT_EQ(f.normalized(i), 1);
  EXPECT_EQ(TernaryQuartic::from_normalized(f.normalized()), f);
  EXPECT_THROW(TernaryQuartic::from_polynomial(x(0).pow(3)), std::invalid_argument);
}

TEST(Quartic, ComposeLinear) {
  const TernaryQuartic f = TernaryQuartic::from_polynomial(x(0).pow(4));
  const std::array<std::array<Rational, 3>, 3> g{{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}};
  EXPECT_EQ(f.compose_linear(g).to_polynomial(), (x(0) + x(1)).pow(4));
}
