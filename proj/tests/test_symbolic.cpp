#include "waring/catalog.hpp"
#include "waring/errors.hpp"
#include "waring/generators.hpp"
#include "waring/io.hpp"
#include "waring/symbolic.hpp"
#include "waring/umbral.hpp"
#include "waring/verification.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace waring;

namespace {

Polynomial sym(std::size_t letter, std::size_t i) { return Polynomial::variable(Variable::sym(letter, i)); }
Polynomial x(std::size_t i) { return Polynomial::variable(Variable::x(i)); }
Polynomial u(std::size_t i) { return Polynomial::variable(Variable::u(i)); }

Signature signature_from_name(std::string_view name) {
  Signature s;
  s.degree = static_cast<unsigned>(name[2] - '0');
  s.order = static_cast<unsigned>(name[4] - '0');
  s.klass = static_cast<unsigned>(name[6] - '0');
  return s;
}

} // namespace

TEST(SymbolicParse, CatalogExamplesRoundTrip) {
  const SymbolicExpression e = parse_symbolic("a_x^2 b_x^2 [abu]^2");
  EXPECT_EQ(e.to_string(), "a_x^2 b_x^2 [abu]^2");
  EXPECT_EQ(parse_symbolic("[abu]^4").atoms().size(), 1u);
  for (const auto& entry : catalog()) {
    const SymbolicExpression p = parse_symbolic(entry.text);
    EXPECT_EQ(parse_symbolic(p.to_string()), p) << entry.name;
  }
}

TEST(SymbolicParse, FactorOrderIsNormalized) {
  EXPECT_EQ(parse_symbolic("[abu]^2 * b_x^2 a_x^2"), parse_symbolic("a_x^2 b_x^2 [abu]^2"));
  EXPECT_EQ(parse_symbolic("a_x a_x^3"), parse_symbolic("a_x^4"));
}

TEST(SymbolicParse, Errors) {
  EXPECT_THROW(parse_symbolic("[aab]"), ParseError);
  EXPECT_THROW(parse_symbolic("[aau]"), ParseError);
  EXPECT_THROW(parse_symbolic("g_x^4"), ParseError);
  EXPECT_THROW(parse_symbolic("a_y^4"), ParseError);
  EXPECT_THROW(parse_symbolic("[ab]"), ParseError);
  EXPECT_THROW(parse_symbolic("a_x^"), ParseError);
  try {
    parse_symbolic("a_x^2 [abz]");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 9u);
  }
}

TEST(Signature, MatchesCatalogNames) {
  for (const auto& entry : catalog()) {
    EXPECT_EQ(signature(parse_symbolic(entry.text)), signature_from_name(entry.name)) << entry.name;
    EXPECT_EQ(entry.signature, signature_from_name(entry.name)) << entry.name;
  }
  EXPECT_EQ(signature(parse_symbolic("a_x b_x c_x [abc] [abu] [acu] [bcu]")), (Signature{3, 3, 3}));
}

TEST(Signature, RejectsWrongSymbolDegree) {
  EXPECT_THROW(signature(parse_symbolic("a_x^3")), std::invalid_argument);
  EXPECT_THROW(signature(parse_symbolic("a_x^4 [abu]")), std::invalid_argument);
}

TEST(Expand, SingleBracket) {
  const Polynomial expected = sym(0, 0) * sym(1, 1) * u(2) - sym(0, 0) * sym(1, 2) * u(1) - sym(0, 1) * sym(1, 0) * u(2) +
                              sym(0, 1) * sym(1, 2) * u(0) + sym(0, 2) * sym(1, 0) * u(1) - sym(0, 2) * sym(1, 1) * u(0);
  EXPECT_EQ(expand(parse_symbolic("[abu]")), expected);
}

TEST(Expand, ContractionPower) {
  const Polynomial l = sym(0, 0) * x(0) + sym(0, 1) * x(1) + sym(0, 2) * x(2);
  EXPECT_EQ(expand(parse_symbolic("a_x^4")), l.pow(4));
}

TEST(Expand, SmallCatalogEntriesAreNonzero) {
  for (const auto& entry : catalog())
    if (entry.signature.degree <= 3) EXPECT_FALSE(expand(catalog_expression(entry.name)).is_zero()) << entry.name;
}

TEST(Umbral, TraceIdentity) {
  const SymbolicExpression trace = parse_symbolic("a_x^4");
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const TernaryQuartic f = random_quartic(seed);
    EXPECT_EQ(umbral_evaluate(trace, f).value, f.to_polynomial());
  }
  EXPECT_EQ(umbral_evaluate(trace, GenericQuartic{}).value, generic_quartic());
}

TEST(Umbral, ContractionRouteMatchesExpansionRoute) {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const TernaryQuartic f = random_quartic(100 + seed, 3);
    for (const auto& entry : catalog()) {
      if (entry.signature.degree > 3) continue;
      const auto& expr = catalog_expression(entry.name);
      EXPECT_EQ(umbral_evaluate(expr, f).value, umbral_substitute(expand(expr), f)) << entry.name;
    }
  }
}

TEST(Umbral, GenericExpansionRouteMatches) {
  const auto& expr = catalog_expression("P_3_0_0");
  EXPECT_EQ(umbral_evaluate(expr, GenericQuartic{}).value, umbral_substitute(expand(expr), GenericQuartic{}));
}

TEST(Umbral, CacheSpecializationMatchesDirectEvaluation) {
  auto& cache = GenericExpansionCache::shared();
  for (std::uint64_t seed = 0; seed < 2; ++seed) {
    const TernaryQuartic f = random_quartic(200 + seed);
    for (const auto& entry : catalog())
      EXPECT_EQ(specialize(cache.get(entry.name), f), umbral_evaluate(catalog_expression(entry.name), f)) << entry.name;
  }
}

TEST(Umbral, CatalogIsNonzeroAndBihomogeneousGenerically) {
  auto& cache = GenericExpansionCache::shared();
  for (const auto& entry : catalog()) {
    const ConcomitantForm& g = cache.get(entry.name);
    EXPECT_TRUE(g.generic);
    EXPECT_FALSE(is_identically_zero(g)) << entry.name;
    EXPECT_TRUE(g.value.is_homogeneous(VarClass::a, entry.signature.degree)) << entry.name;
    EXPECT_TRUE(g.value.is_homogeneous(VarClass::x, entry.signature.order)) << entry.name;
    EXPECT_TRUE(g.value.is_homogeneous(VarClass::u, entry.signature.klass)) << entry.name;
  }
}

TEST(Umbral, NumericValuesAreBihomogeneous) {
  const TernaryQuartic f = random_quartic(300);
  for (const auto& entry : catalog()) {
    const ConcomitantForm c = umbral_evaluate(catalog_expression(entry.name), f);
    EXPECT_FALSE(c.generic);
    EXPECT_TRUE(c.value.uses_only({VarClass::x, VarClass::u}));
    EXPECT_TRUE(c.value.is_homogeneous(VarClass::x, entry.signature.order)) << entry.name;
    EXPECT_TRUE(c.value.is_homogeneous(VarClass::u, entry.signature.klass)) << entry.name;
  }
}

TEST(Umbral, ScalingByTwoMultipliesByTwoToTheDegree) {
  const TernaryQuartic f = random_quartic(400);
  for (const auto& entry : catalog()) {
    const auto& expr = catalog_expression(entry.name);
    const Rational factor = Rational(Integer(1) << entry.signature.degree);
    EXPECT_EQ(umbral_evaluate(expr, f * Rational(2)).value, umbral_evaluate(expr, f).value * factor) << entry.name;
  }
}

TEST(Umbral, LetterPermutationChangesAtMostSign) {
  const TernaryQuartic f = random_quartic(500);
  const std::array<std::array<std::uint8_t, 6>, 3> perms{{{1, 0, 2, 3, 4, 5}, {2, 0, 1, 3, 4, 5}, {5, 4, 3, 2, 1, 0}}};
  for (const auto& entry : catalog()) {
    const auto& expr = catalog_expression(entry.name);
    const Polynomial base = umbral_evaluate(expr, f).value;
    for (const auto& p : perms) {
      const Polynomial moved = umbral_evaluate(expr.relabel(p), f).value;
      EXPECT_TRUE(moved == base || moved == -base) << entry.name;
    }
  }
}

TEST(Umbral, HessianProportionality) {
  std::optional<Rational> lambda;
  for (std::uint64_t seed = 0; seed < 11; ++seed) {
    const TernaryQuartic f = random_quartic(600 + seed);
    const Polynomial phi = umbral_evaluate(catalog_expression("P_3_6_0"), f).value;
    const Polynomial h = hessian_determinant(f);
    ASSERT_FALSE(phi.is_zero());
    if (!lambda) lambda = h.coefficient(phi.terms().front().mono) / phi.terms().front().coef;
    EXPECT_EQ(h, phi * *lambda);
  }
  EXPECT_NE(*lambda, 0);
}

TEST(Umbral, VanishingExamples) {
  EXPECT_TRUE(is_identically_zero(ConcomitantForm{}));
  const TernaryQuartic x4 = parse_quartic_text("x0^4");
  EXPECT_TRUE(is_identically_zero(umbral_evaluate(catalog_expression("P_2_4_2"), x4)));
  const TernaryQuartic binary = parse_quartic_text("x0^4 + x1^4");
  const auto& p204 = catalog_expression("P_2_0_4");
  const ConcomitantForm c = umbral_evaluate(p204, binary);
  EXPECT_FALSE(is_identically_zero(c));
  EXPECT_EQ(c.value, umbral_substitute(expand(p204), binary));
  EXPECT_EQ(c.value, u(2).pow(4) * Rational(2));
}

TEST(Umbral, FermatInvariantAgainstExpansionOracle) {
  const TernaryQuartic fermat = parse_quartic_text("x0^4 + x1^4 + x2^4");
  const auto& expr = catalog_expression("P_3_0_0");
  const Polynomial direct = umbral_evaluate(expr, fermat).value;
  EXPECT_EQ(direct, umbral_substitute(expand(expr), fermat));
  EXPECT_FALSE(direct.is_zero());
  EXPECT_TRUE(direct.is_constant());
}

TEST(FormCombine, Examples) {
  auto& cache = GenericExpansionCache::shared();
  const ConcomitantForm& p3 = cache.get("P_3_0_0");
  const ConcomitantForm& p6 = cache.get("P_6_0_0");
  const ConcomitantForm sq = form_combine({{Rational(1), {p3, p3}}});
  EXPECT_EQ(sq.signature, (Signature{6, 0, 0}));
  EXPECT_EQ(sq.value, p3.value * p3.value);
  const ConcomitantForm u5 = form_combine({{Rational(3), {p6}}, {Rational(-1), {p3, p3}}});
  EXPECT_FALSE(is_identically_zero(u5));
  EXPECT_TRUE(u5.value.is_homogeneous(VarClass::a, 6));
  const ConcomitantForm zero = form_combine({{make_rational(5, 7), {p6}}, {make_rational(-5, 7), {p6}}});
  EXPECT_TRUE(is_identically_zero(zero));
}

TEST(FormCombine, RejectsMixedSignatures) {
  auto& cache = GenericExpansionCache::shared();
  EXPECT_THROW(form_combine({{Rational(1), {cache.get("P_3_0_0")}}, {Rational(1), {cache.get("P_6_0_0")}}}),
               std::invalid_argument);
  const ConcomitantForm numeric = umbral_evaluate(catalog_expression("P_3_0_0"), random_quartic(1));
  EXPECT_THROW(form_combine({{Rational(1), {cache.get("P_3_0_0")}}, {Rational(1), {numeric}}}), std::invalid_argument);
}

TEST(SpanRank, SmallLists) {
  std::vector<SymbolicExpression> u1{catalog_expression("P_2_4_2"), catalog_expression("P_2_0_4")};
  EXPECT_EQ(coefficient_span_rank(u1, 2), 75u);
  EXPECT_EQ(coefficient_span_rank(std::vector<SymbolicExpression>{catalog_expression("P_2_0_4")}, 2), 15u);
  EXPECT_EQ(coefficient_span_rank(std::vector<SymbolicExpression>{catalog_expression("P_3_0_0")}, 3), 1u);
  EXPECT_THROW(coefficient_span_rank(u1, 3), std::invalid_argument);
}

TEST(Cache, SaveLoadRoundTripAndVersioning) {
  const auto dir = std::filesystem::temp_directory_path() / "waring_cache_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "cache.txt";
  auto& shared = GenericExpansionCache::shared();
  shared.fill();
  shared.save(path);
  GenericExpansionCache loaded;
  ASSERT_TRUE(loaded.load(path));
  for (const auto& entry : catalog()) {
    ASSERT_TRUE(loaded.contains(entry.name));
    EXPECT_EQ(loaded.get(entry.name), shared.get(entry.name)) << entry.name;
  }

  std::string text;
  {
    std::ifstream in(path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  const auto stale = dir / "stale.txt";
  {
    std::ofstream out(stale);
    out << "waring-generic-cache v0-old " << text.substr(text.find(' ', text.find(' ') + 1) + 1);
  }
  GenericExpansionCache other;
  EXPECT_FALSE(other.load(stale));
  EXPECT_FALSE(other.contains("P_2_4_2"));
  EXPECT_FALSE(other.load(dir / "missing.txt"));

  const auto broken = dir / "broken.txt";
  {
    std::ofstream out(broken);
    out << "waring-generic-cache " << catalog_version() << " 1\nP_2_4_2 notanumber\n";
  }
  EXPECT_THROW(other.load(broken), std::runtime_error);
  std::filesystem::remove_all(dir);
}

TEST(Catalog, LookupAndVersion) {
  EXPECT_EQ(catalog().size(), 15u);
  EXPECT_THROW(catalog_entry("P_9_9_9"), std::invalid_argument);
  EXPECT_EQ(catalog_version().rfind("v1-", 0), 0u);
}
