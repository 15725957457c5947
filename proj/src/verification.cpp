#include "waring/verification.hpp"

#include "waring/apolarity.hpp"
#include "waring/classifier.hpp"
#include "waring/degeneracy.hpp"
#include "waring/generators.hpp"
#include "waring/matrix.hpp"

#include <array>
#include <functional>
#include <map>
#include <stdexcept>

namespace waring {

bool SuiteResult::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

Polynomial hessian_determinant(const TernaryQuartic& f) {
  const Polynomial p = f.to_polynomial();
  std::vector<std::vector<Polynomial>> h(3, std::vector<Polynomial>(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) h[i][j] = p.derivative(Variable::x(i)).derivative(Variable::x(j));
  return determinant(h);
}

namespace {

std::string count(int hits, int total) { return std::to_string(hits) + "/" + std::to_string(total); }

CheckResult check(std::string name, bool passed, std::string detail) {
  return {std::move(name), passed, std::move(detail)};
}

SuiteResult theorem_suite(GenericExpansionCache&) {
  SuiteResult r{"theorem", {}};
  constexpr int kSeeds = 20;
  for (int s = 1; s <= 5; ++s) {
    int members = 0, separated = 0;
    for (int seed = 0; seed < kSeeds; ++seed) {
      QuarticEvaluator eval(random_in_Ws(s, static_cast<std::uint64_t>(seed)));
      if (eval.list_vanishes(membership_list(s).name)) ++members;
      if (s >= 2 && !eval.list_vanishes(membership_list(s - 1).name)) ++separated;
    }
    const std::string w = "W" + std::to_string(s);
    r.checks.push_back(check(w + " membership", members == kSeeds, "U" + std::to_string(s) + " = 0 at " + count(members, kSeeds)));
    if (s >= 2)
      r.checks.push_back(check(w + " separation", separated >= 18,
                               "U" + std::to_string(s - 1) + " != 0 at " + count(separated, kSeeds) + ", need 18"));
  }
  return r;
}

SuiteResult samples_suite(GenericExpansionCache&) {
  SuiteResult r{"samples", {}};
  const auto samples = degenerate_samples();
  const int capolary = border_rank(samples.at("capolary"));
  r.checks.push_back(check("capolary border rank", capolary == 4, "got " + std::to_string(capolary) + ", expected 4"));
  const int clebsch = border_rank(samples.at("clebsch"));
  r.checks.push_back(check("clebsch border rank", clebsch == 5, "got " + std::to_string(clebsch) + ", expected 5"));
  const auto& cusp = samples.at("cusp");
  const bool in_w2 = membership(cusp, 2);
  const bool open = in_W2_open(cusp);
  r.checks.push_back(check("x0^3*x1 in W2 but not W2 open", in_w2 && !open,
                           std::string("W2 ") + (in_w2 ? "yes" : "no") + ", W2 open " + (open ? "yes" : "no")));
  const int veronese = border_rank(samples.at("veronese"));
  r.checks.push_back(check("x0^4 border rank", veronese == 1, "got " + std::to_string(veronese)));
  return r;
}

SuiteResult degrees_suite(GenericExpansionCache&) {
  SuiteResult r{"degrees", {}};
  const std::map<int, long> expected{{3, 112}, {4, 35}, {5, 6}};
  for (const auto& [s, d] : expected) {
    const Integer got = degree_of_Ws(s);
    r.checks.push_back(check("deg W" + std::to_string(s), got == d, "got " + got.get_str() + ", expected " + std::to_string(d)));
  }
  return r;
}

SuiteResult spans_suite(GenericExpansionCache& cache) {
  SuiteResult r{"spans", {}};
  const std::array<std::size_t, 5> expected{75, 148, 105, 21, 1};
  for (int s = 1; s <= 5; ++s) {
    const auto& list = membership_list(s);
    std::vector<ConcomitantForm> forms;
    for (const auto& e : list.elements) forms.push_back(evaluate_generic(e, cache));
    const std::size_t got = coefficient_span_rank(forms, static_cast<unsigned>(s + 1));
    const std::size_t want = expected[static_cast<std::size_t>(s - 1)];
    r.checks.push_back(check("U" + std::to_string(s) + " span in degree " + std::to_string(s + 1), got == want,
                             "got " + std::to_string(got) + ", expected " + std::to_string(want)));
  }
  return r;
}

SuiteResult hessian_suite(GenericExpansionCache&) {
  SuiteResult r{"hessian", {}};
  std::optional<Rational> lambda;
  int agree = 0;
  constexpr int kForms = 10;
  for (int seed = 0; seed <= kForms; ++seed) {
    const TernaryQuartic f = random_quartic(static_cast<std::uint64_t>(1000 + seed));
    const Polynomial h = hessian_determinant(f);
    QuarticEvaluator eval(f);
    const Polynomial phi = eval.entry("P_3_6_0").value;
    if (!lambda) {
      if (phi.is_zero() || h.is_zero()) break;
      const Term& lead = phi.terms().front();
      lambda = h.coefficient(lead.mono) / lead.coef;
      continue;
    }
    if (h == phi * *lambda) ++agree;
  }
  const bool ok = lambda && *lambda != 0 && agree == kForms;
  r.checks.push_back(check("det Hessian = lambda * P_3_6_0", ok,
                           "lambda = " + (lambda ? to_string(*lambda) : std::string("undetermined")) + ", agreeing " + count(agree, kForms)));
  return r;
}

SuiteResult catalecticant_identity_suite(GenericExpansionCache& cache) {
  SuiteResult r{"catalecticant-identity", {}};
  const Polynomial det = determinant(generic_catalecticant(2));
  const Polynomial u5 = evaluate_generic(vanishing_list(ListName::U5).elements.front(), cache).value;
  bool ok = !det.is_zero() && !u5.is_zero();
  Rational lambda;
  if (ok) {
    const Term& lead = u5.terms().front();
    lambda = det.coefficient(lead.mono) / lead.coef;
    ok = lambda != 0 && det == u5 * lambda;
  }
  r.checks.push_back(check("det alpha_2 = lambda * (U5 element)", ok,
                           "lambda = " + to_string(lambda) + ", " + std::to_string(det.size()) + " terms"));
  return r;
}

SuiteResult rank_conditions_suite(GenericExpansionCache&) {
  SuiteResult r{"rank-conditions", {}};
  constexpr int kForms = 100;
  std::array<int, 3> agree{};
  for (int i = 0; i < kForms; ++i) {
    const int s = 1 + i % 6;
    const TernaryQuartic f = random_in_Ws(s, static_cast<std::uint64_t>(2000 + i / 6));
    const CrossCheckReport c = cross_check(f);
    agree[0] += c.agree3;
    agree[1] += c.agree4;
    agree[2] += c.agree5;
  }
  r.checks.push_back(check("W3 <=> rank alpha_2 <= 3", agree[0] == kForms, count(agree[0], kForms)));
  r.checks.push_back(check("W4 <=> rank alpha_2 <= 4", agree[1] == kForms, count(agree[1], kForms)));
  r.checks.push_back(check("W5 <=> det alpha_2 = 0", agree[2] == kForms, count(agree[2], kForms)));
  return r;
}

SuiteResult gordan_noether_suite(GenericExpansionCache&) {
  SuiteResult r{"gordan-noether", {}};
  std::vector<TernaryQuartic> disguised;
  for (const char* name : {"binary", "binary3", "veronese"}) disguised.push_back(degenerate_samples().at(name));
  for (int seed = 0; seed < 7; ++seed) {
    TernaryQuartic b;
    const TernaryQuartic coeffs = random_quartic(static_cast<std::uint64_t>(3000 + seed));
    for (int i0 = 4; i0 >= 0; --i0) b.set_coeff({i0, 4 - i0, 0}, coeffs.coeff(static_cast<std::size_t>(4 - i0)));
    if (b.is_zero()) b.set_coeff({4, 0, 0}, 1);
    disguised.push_back(b);
  }
  int binary_ok = 0, generic_ok = 0;
  for (std::size_t i = 0; i < disguised.size(); ++i) {
    const TernaryQuartic f = disguised[i].compose_linear(random_unimodular(3100 + i));
    QuarticEvaluator eval(f);
    const bool zero = is_identically_zero(eval.entry("P_3_6_0"));
    if (zero && rank(catalecticant(f, 3).entries) <= 2) ++binary_ok;
  }
  constexpr int kGeneric = 10;
  for (int seed = 0; seed < kGeneric; ++seed) {
    const TernaryQuartic f = random_quartic(static_cast<std::uint64_t>(3200 + seed));
    QuarticEvaluator eval(f);
    const bool zero = is_identically_zero(eval.entry("P_3_6_0"));
    if (zero == (rank(catalecticant(f, 3).entries) <= 2)) ++generic_ok;
  }
  const int n = static_cast<int>(disguised.size());
  r.checks.push_back(check("binary forms in disguise", binary_ok == n, "P_3_6_0 = 0 and rank alpha_3 <= 2 at " + count(binary_ok, n)));
  r.checks.push_back(check("generic forms", generic_ok == kGeneric, "equivalence holds at " + count(generic_ok, kGeneric)));
  return r;
}

SuiteResult reye_suite(GenericExpansionCache&) {
  SuiteResult r{"reye", {}};
  constexpr int kPairs = 10;
  int contained = 0, annihilated = 0;
  for (int seed = 0; seed < kPairs; ++seed) {
    const PowerSumSample sample = random_power_sum(1 + seed % 5, static_cast<std::uint64_t>(4000 + seed));
    bool all = true;
    for (const auto& g : ideal_degree4(sample.summands)) all = all && annihilates(g, sample.form);
    annihilated += all;
    contained += reye_check(sample.summands, sample.form);
  }
  int rejected = 0;
  for (int seed = 0; seed < kPairs; ++seed) {
    const TernaryQuartic f = random_quartic(static_cast<std::uint64_t>(4100 + seed));
    const PowerSumSample z = random_power_sum(3, static_cast<std::uint64_t>(4200 + seed));
    rejected += !reye_check(z.summands, f);
  }
  r.checks.push_back(check("(I_Z)_4 annihilates F", annihilated == kPairs, count(annihilated, kPairs)));
  r.checks.push_back(check("reye_check accepts power sums", contained == kPairs, count(contained, kPairs)));
  r.checks.push_back(check("reye_check rejects generic forms", rejected == kPairs, count(rejected, kPairs)));
  return r;
}

SuiteResult constants_suite(GenericExpansionCache&) {
  SuiteResult r{"constants", {}};
  std::vector<TernaryQuartic> w4, w5;
  for (int seed = 0; seed < 5; ++seed) {
    w4.push_back(random_in_Ws(4, static_cast<std::uint64_t>(5000 + seed)));
    w5.push_back(random_in_Ws(5, static_cast<std::uint64_t>(5000 + seed)));
  }
  const auto attempt = [&](const std::string& name, const std::function<Rational()>& derive, long stored) {
    try {
      const Rational lambda = derive();
      r.checks.push_back(check(name, lambda == stored, "derived " + to_string(lambda) + ", stored " + std::to_string(stored)));
    } catch (const std::invalid_argument& e) {
      r.checks.push_back(check(name, false, e.what()));
    }
  };
  attempt("U4 ratio", [&] {
    return derive_combination(CombinedConcomitant::single("P_5_0_4_I"), CombinedConcomitant::single("P_5_0_4_II"), w4);
  }, kU4Ratio);
  attempt("U5 ratio", [&] {
    const auto p3 = catalog_entry("P_3_0_0").name;
    const CombinedConcomitant square{"P_3_0_0^2", {{Rational(1), {p3, p3}}}};
    return derive_combination(square, CombinedConcomitant::single("P_6_0_0"), w5);
  }, kU5Ratio);
  return r;
}

SuiteResult w2open_suite(GenericExpansionCache&) {
  SuiteResult r{"w2open", {}};
  const auto samples = degenerate_samples();
  r.checks.push_back(check("x0^3*x1 not in W2 open", !in_W2_open(samples.at("cusp")) && membership(samples.at("cusp"), 2), ""));
  r.checks.push_back(check("x0^4 + x1^4 in W2 open", in_W2_open(samples.at("binary")), ""));
  constexpr int kSeeds = 5;
  int sums = 0, tangents = 0;
  for (int seed = 0; seed < kSeeds; ++seed) {
    const PowerSumSample p = random_power_sum(2, static_cast<std::uint64_t>(6000 + seed));
    sums += in_W2_open(p.form);
    const Polynomial l1 = p.summands[0].to_polynomial(), l2 = p.summands[1].to_polynomial();
    const TernaryQuartic t = TernaryQuartic::from_polynomial(l1.pow(3) * l2);
    tangents += membership(t, 2) && !in_W2_open(t);
  }
  r.checks.push_back(check("L1^4 + L2^4 in W2 open", sums == kSeeds, count(sums, kSeeds)));
  r.checks.push_back(check("L1^3*L2 in W2 but not W2 open", tangents == kSeeds, count(tangents, kSeeds)));
  return r;
}

using SuiteFn = SuiteResult (*)(GenericExpansionCache&);

const std::vector<std::pair<std::string_view, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string_view, SuiteFn>> v{
      {"theorem", theorem_suite},
      {"samples", samples_suite},
      {"degrees", degrees_suite},
      {"spans", spans_suite},
      {"hessian", hessian_suite},
      {"catalecticant-identity", catalecticant_identity_suite},
      {"rank-conditions", rank_conditions_suite},
      {"gordan-noether", gordan_noether_suite},
      {"reye", reye_suite},
      {"constants", constants_suite},
      {"w2open", w2open_suite},
  };
  return v;
}

} // namespace

std::span<const std::string_view> suite_names() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> out;
    for (const auto& [n, fn] : suites()) out.push_back(n);
    return out;
  }();
  return names;
}

SuiteResult run_suite(std::string_view name, GenericExpansionCache& cache) {
  for (const auto& [n, fn] : suites())
    if (n == name) return fn(cache);
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

} // namespace waring
