#include "waring/umbral.hpp"

#include "waring/matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace waring {

namespace {

/// Replaces the degree-4 umbral monomial of `symbol` in (m, c) by the
/// matching coefficient. Returns false when the term vanishes.
class Contractor {
public:
  explicit Contractor(const UmbralTarget& target) {
    if (const auto* f = std::get_if<TernaryQuartic>(&target)) {
      numeric_ = true;
      b_ = f->normalized();
    }
  }

  bool apply(std::uint8_t symbol, Monomial& m, Rational& c) const {
    const std::size_t base = sym_slot(symbol, 0);
    const MultiIndex idx{m[base], m[base + 1], m[base + 2]};
    if (idx.degree() == 0) return true;
    if (idx.degree() != 4) throw std::logic_error("umbral letter with degree other than 4 in a term");
    const std::size_t id = monomial_position(idx);
    m.set(base, 0);
    m.set(base + 1, 0);
    m.set(base + 2, 0);
    if (numeric_) {
      if (b_[id] == 0) return false;
      c *= b_[id];
    } else {
      m.set(kSlotA + id, m[kSlotA + id] + 1U);
    }
    return true;
  }

private:
  bool numeric_ = false;
  std::array<Rational, TernaryQuartic::kNumCoefficients> b_{};
};

/// Greedy factor order: prefer the factor completing the most letters, then
/// the one leaving the fewest partially multiplied letters.
std::vector<std::size_t> contraction_order(const std::vector<SymbolicAtom>& atoms) {
  std::array<unsigned, kMaxSymbols> remaining{};
  for (const auto& a : atoms)
    for (std::size_t i = 0; i < a.arity(); ++i) ++remaining[a.symbols[i]];
  std::array<bool, kMaxSymbols> touched{};
  std::vector<bool> used(atoms.size(), false);
  std::vector<std::size_t> order;

  while (order.size() < atoms.size()) {
    std::size_t best = atoms.size();
    int best_completed = -1;
    int best_open = 0;
    for (std::size_t k = 0; k < atoms.size(); ++k) {
      if (used[k]) continue;
      auto rem = remaining;
      auto tch = touched;
      for (std::size_t i = 0; i < atoms[k].arity(); ++i) {
        --rem[atoms[k].symbols[i]];
        tch[atoms[k].symbols[i]] = true;
      }
      int completed = 0, open = 0;
      for (std::size_t s = 0; s < kMaxSymbols; ++s) {
        if (!tch[s]) continue;
        if (rem[s] == 0 && remaining[s] != 0) ++completed;
        if (rem[s] != 0) ++open;
      }
      if (completed > best_completed || (completed == best_completed && open < best_open)) {
        best = k;
        best_completed = completed;
        best_open = open;
      }
    }
    used[best] = true;
    order.push_back(best);
    for (std::size_t i = 0; i < atoms[best].arity(); ++i) {
      --remaining[atoms[best].symbols[i]];
      touched[atoms[best].symbols[i]] = true;
    }
  }
  return order;
}

} // namespace

ConcomitantForm umbral_evaluate(const SymbolicExpression& expr, const UmbralTarget& target) {
  const Signature sig = signature(expr);
  const Contractor contractor(target);
  const auto& atoms = expr.atoms();

  std::array<unsigned, kMaxSymbols> remaining{};
  for (const auto& a : atoms)
    for (std::size_t i = 0; i < a.arity(); ++i) ++remaining[a.symbols[i]];

  Polynomial current(1);
  for (std::size_t k : contraction_order(atoms)) {
    const SymbolicAtom& atom = atoms[k];
    std::vector<std::uint8_t> completed;
    for (std::size_t i = 0; i < atom.arity(); ++i)
      if (--remaining[atom.symbols[i]] == 0) completed.push_back(atom.symbols[i]);
    const Polynomial factor = atom_polynomial(atom);
    if (completed.empty()) {
      current *= factor;
    } else {
      current = multiply_transform(current, factor, [&](Monomial& m, Rational& c) {
        for (auto s : completed)
          if (!contractor.apply(s, m, c)) return false;
        return true;
      });
    }
    if (current.is_zero()) break;
  }
  return {std::move(current), sig, std::holds_alternative<GenericQuartic>(target)};
}

Polynomial umbral_substitute(const Polynomial& expanded, const UmbralTarget& target) {
  const Contractor contractor(target);
  return map_terms(expanded, [&](Monomial& m, Rational& c) {
    for (std::uint8_t s = 0; s < kMaxSymbols; ++s) {
      const unsigned d = m[sym_slot(s, 0)] + m[sym_slot(s, 1)] + m[sym_slot(s, 2)];
      if (d != 0 && d != 4) throw std::invalid_argument("umbral_substitute: letter of degree other than 4");
      if (!contractor.apply(s, m, c)) return false;
    }
    return true;
  });
}

ConcomitantForm specialize(const ConcomitantForm& generic, const TernaryQuartic& f) {
  if (!generic.generic) throw std::invalid_argument("specialize: form is already numeric");
  const auto b = f.normalized();
  const Polynomial value = map_terms(generic.value, [&](Monomial& m, Rational& c) {
    for (std::size_t id = 0; id < kNumCoefficientVars; ++id) {
      const unsigned e = m[kSlotA + id];
      if (e == 0) continue;
      if (b[id] == 0) return false;
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), b[id].get_num_mpz_t(), e);
      mpz_pow_ui(p.get_den_mpz_t(), b[id].get_den_mpz_t(), e);
      c *= p;
      m.set(kSlotA + id, 0);
    }
    return true;
  });
  return {value, generic.signature, false};
}

ConcomitantForm form_combine(const std::vector<FormProduct>& terms) {
  if (terms.empty()) throw std::invalid_argument("form_combine: no terms");
  ConcomitantForm result;
  bool first = true;
  for (const auto& t : terms) {
    Signature sig;
    Polynomial product(t.scalar);
    bool generic = false;
    bool generic_known = false;
    for (const auto& f : t.forms) {
      if (generic_known && f.generic != generic) throw std::invalid_argument("form_combine: mixed generic and numeric forms");
      generic = f.generic;
      generic_known = true;
      sig.degree += f.signature.degree;
      sig.order += f.signature.order;
      sig.klass += f.signature.klass;
      product *= f.value;
    }
    if (first) {
      result.signature = sig;
      result.generic = generic;
      first = false;
    } else {
      if (sig != result.signature)
        throw std::invalid_argument("form_combine: mixed signatures " + sig.to_string() + " and " +
                                    result.signature.to_string());
      if (generic_known && generic != result.generic)
        throw std::invalid_argument("form_combine: mixed generic and numeric forms");
    }
    result.value += product;
  }
  return result;
}

std::size_t coefficient_span_rank(const std::vector<ConcomitantForm>& generic_forms, unsigned degree) {
  // Group each form's terms by their x,u part; every group is one vector over
  // the a-monomials, indexed by columns allocated on first sight.
  std::map<Monomial, std::size_t> columns;
  std::vector<std::map<std::size_t, Rational>> rows;
  for (const auto& f : generic_forms) {
    if (!f.generic) throw std::invalid_argument("coefficient_span_rank: numeric form");
    if (f.signature.degree != degree)
      throw std::invalid_argument("coefficient_span_rank: form of a-degree " + std::to_string(f.signature.degree) +
                                  ", expected " + std::to_string(degree));
    std::map<Monomial, std::size_t> row_of;
    for (const auto& t : f.value.terms()) {
      Monomial a_part, xu_part;
      for (std::size_t s = 0; s < kNumVariables; ++s) {
        if (t.mono[s] == 0) continue;
        (s < kSlotX ? a_part : xu_part).set(s, t.mono[s]);
      }
      if (a_part.degree(VarClass::a) != degree) throw std::logic_error("generic form is not homogeneous in a");
      auto [rit, fresh_row] = row_of.try_emplace(xu_part, rows.size());
      if (fresh_row) rows.emplace_back();
      auto [cit, fresh_col] = columns.try_emplace(a_part, columns.size());
      rows[rit->second][cit->second] = t.coef;
    }
  }
  RationalMatrix m(rows.size(), columns.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) m(r, c) = v;
  return rank(m);
}

std::size_t coefficient_span_rank(const std::vector<SymbolicExpression>& exprs, unsigned degree) {
  std::vector<ConcomitantForm> forms;
  for (const auto& e : exprs) forms.push_back(umbral_evaluate(e, GenericQuartic{}));
  return coefficient_span_rank(forms, degree);
}

} // namespace waring
