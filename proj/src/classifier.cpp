#include "waring/classifier.hpp"

#include <stdexcept>

namespace waring {

CombinedConcomitant CombinedConcomitant::single(std::string_view name) {
  const auto& e = catalog_entry(name);
  return {std::string(e.name), {{Rational(1), {e.name}}}};
}

Signature CombinedConcomitant::signature() const {
  Signature sig;
  if (terms.empty()) return sig;
  for (auto f : terms.front().factors) {
    const auto& s = catalog_entry(f).signature;
    sig.degree += s.degree;
    sig.order += s.order;
    sig.klass += s.klass;
  }
  return sig;
}

std::string_view to_string(ListName name) {
  switch (name) {
  case ListName::U1: return "U1";
  case ListName::U2: return "U2";
  case ListName::U3: return "U3";
  case ListName::U4: return "U4";
  case ListName::U5: return "U5";
  case ListName::V: return "V";
  }
  return "?";
}

namespace {

std::vector<CombinedConcomitant> singles(std::initializer_list<std::string_view> names) {
  std::vector<CombinedConcomitant> out;
  for (auto n : names) out.push_back(CombinedConcomitant::single(n));
  return out;
}

const std::map<ListName, VanishingList>& lists() {
  static const std::map<ListName, VanishingList> m = [] {
    std::map<ListName, VanishingList> out;
    out[ListName::U1] = {ListName::U1, singles({"P_2_4_2", "P_2_0_4"})};
    out[ListName::U2] = {ListName::U2, singles({"P_3_6_0", "P_3_0_6", "P_3_3_3", "P_3_2_2", "P_3_0_0"})};
    out[ListName::U3] = {ListName::U3, singles({"P_4_4_0", "P_4_2_4", "P_4_1_3", "P_4_0_2"})};
    CombinedConcomitant u4a{"P_5_0_4_I - " + std::to_string(kU4Ratio) + " P_5_0_4_II",
                            {{Rational(1), {catalog_entry("P_5_0_4_I").name}},
                             {Rational(-kU4Ratio), {catalog_entry("P_5_0_4_II").name}}}};
    out[ListName::U4] = {ListName::U4, {u4a, CombinedConcomitant::single("P_5_2_0")}};
    CombinedConcomitant u5{std::to_string(kU5Ratio) + " P_6_0_0 - P_3_0_0^2",
                           {{Rational(kU5Ratio), {catalog_entry("P_6_0_0").name}},
                            {Rational(-1), {catalog_entry("P_3_0_0").name, catalog_entry("P_3_0_0").name}}}};
    out[ListName::U5] = {ListName::U5, {u5}};
    out[ListName::V] = {ListName::V, singles({"P_2_0_4", "P_3_0_6", "P_3_6_0"})};
    return out;
  }();
  return m;
}

void check_nonzero(const TernaryQuartic& f) {
  if (f.is_zero()) throw std::invalid_argument("the zero form lies in no Waring locus");
}

} // namespace

const VanishingList& vanishing_list(ListName name) { return lists().at(name); }

const VanishingList& membership_list(int s) {
  if (s < 1 || s > 5) throw std::invalid_argument("membership: s must lie in 1..5");
  static constexpr ListName kByRank[] = {ListName::U1, ListName::U2, ListName::U3, ListName::U4, ListName::U5};
  return vanishing_list(kByRank[s - 1]);
}

QuarticEvaluator::QuarticEvaluator(TernaryQuartic f) : form_(std::move(f)) { check_nonzero(form_); }

const ConcomitantForm& QuarticEvaluator::entry(std::string_view name) {
  if (auto it = memo_.find(name); it != memo_.end()) return it->second;
  const auto& e = catalog_entry(name);
  return memo_.emplace(std::string(e.name), umbral_evaluate(catalog_expression(e.name), form_)).first->second;
}

ConcomitantForm QuarticEvaluator::evaluate(const CombinedConcomitant& c) {
  std::vector<FormProduct> products;
  for (const auto& t : c.terms) {
    FormProduct p{t.scalar, {}};
    for (auto f : t.factors) p.forms.push_back(entry(f));
    products.push_back(std::move(p));
  }
  return form_combine(products);
}

bool QuarticEvaluator::list_vanishes(ListName name) {
  for (const auto& e : vanishing_list(name).elements)
    if (!vanishes(e)) return false;
  return true;
}

ConcomitantForm evaluate_generic(const CombinedConcomitant& c, GenericExpansionCache& cache) {
  std::vector<FormProduct> products;
  for (const auto& t : c.terms) {
    FormProduct p{t.scalar, {}};
    for (auto f : t.factors) p.forms.push_back(cache.get(f));
    products.push_back(std::move(p));
  }
  return form_combine(products);
}

bool membership(const TernaryQuartic& f, int s) {
  const auto& list = membership_list(s);
  QuarticEvaluator eval(f);
  return eval.list_vanishes(list.name);
}

int border_rank(const TernaryQuartic& f) {
  QuarticEvaluator eval(f);
  for (int s = 1; s <= 5; ++s)
    if (eval.list_vanishes(membership_list(s).name)) return s;
  return 6;
}

bool in_W2_open(const TernaryQuartic& f) {
  QuarticEvaluator eval(f);
  if (eval.list_vanishes(ListName::U1)) return true;
  return eval.list_vanishes(ListName::U2) && !eval.list_vanishes(ListName::V);
}

bool ClassificationReport::vanishing_is_monotone() const {
  for (int s = 1; s < 5; ++s) {
    const bool here = vanishing.at("U" + std::to_string(s));
    const bool next = vanishing.at("U" + std::to_string(s + 1));
    if (here && !next) return false;
  }
  return true;
}

ClassificationReport classify(const TernaryQuartic& f) {
  QuarticEvaluator eval(f);
  ClassificationReport r;
  for (ListName n : {ListName::U1, ListName::U2, ListName::U3, ListName::U4, ListName::U5, ListName::V})
    r.vanishing[std::string(to_string(n))] = eval.list_vanishes(n);
  r.border_rank = 6;
  for (int s = 1; s <= 5; ++s)
    if (r.vanishing.at("U" + std::to_string(s))) {
      r.border_rank = s;
      break;
    }
  r.rank_profile = rank_profile(f);
  if (r.border_rank <= 2) r.in_W2_open = r.vanishing.at("U1") || (r.vanishing.at("U2") && !r.vanishing.at("V"));
  return r;
}

CrossCheckReport cross_check(const TernaryQuartic& f) {
  QuarticEvaluator eval(f);
  CrossCheckReport r;
  r.ranks = rank_profile(f);
  r.det_alpha2 = determinant(catalecticant(f, 2).entries);
  r.in_W3 = eval.list_vanishes(ListName::U3);
  r.in_W4 = eval.list_vanishes(ListName::U4);
  r.in_W5 = eval.list_vanishes(ListName::U5);
  r.agree3 = r.in_W3 == (r.ranks.rank(2) <= 3);
  r.agree4 = r.in_W4 == (r.ranks.rank(2) <= 4);
  r.agree5 = r.in_W5 == (r.det_alpha2 == 0);
  return r;
}

Rational derive_combination(const CombinedConcomitant& a, const CombinedConcomitant& b,
                            std::span<const TernaryQuartic> samples) {
  if (a.signature() != b.signature())
    throw std::invalid_argument("derive_combination: signatures " + a.signature().to_string() + " and " +
                                b.signature().to_string() + " differ");
  std::optional<Rational> lambda;
  for (const auto& f : samples) {
    QuarticEvaluator eval(f);
    const ConcomitantForm va = eval.evaluate(a);
    const ConcomitantForm vb = eval.evaluate(b);
    if (is_identically_zero(vb)) {
      if (!is_identically_zero(va)) throw std::invalid_argument("derive_combination: no common ratio (b vanishes alone)");
      continue;
    }
    const Term& lead = vb.value.terms().front();
    const Rational ratio = va.value.coefficient(lead.mono) / lead.coef;
    if (va.value != vb.value * ratio) throw std::invalid_argument("derive_combination: forms are not proportional");
    if (lambda && *lambda != ratio) throw std::invalid_argument("derive_combination: ratio differs between samples");
    lambda = ratio;
  }
  if (!lambda) throw std::invalid_argument("derive_combination: both forms vanish at every sample");
  return *lambda;
}

} // namespace waring
