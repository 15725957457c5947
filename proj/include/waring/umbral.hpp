#ifndef WARING_UMBRAL_HPP
#define WARING_UMBRAL_HPP

#include "waring/polynomial.hpp"
#include "waring/quartic.hpp"
#include "waring/symbolic.hpp"

#include <variant>
#include <vector>

namespace waring {

/// Marker for evaluation at the generic quartic: umbral monomials become the
/// coefficient variables a_I.
struct GenericQuartic {};

using UmbralTarget = std::variant<GenericQuartic, TernaryQuartic>;

/// An evaluated concomitant: a polynomial in x and u (and a, when generic)
/// of x-degree `signature.order` and u-degree `signature.klass`. Generic
/// values are homogeneous of degree `signature.degree` in a.
struct ConcomitantForm {
  Polynomial value;
  Signature signature;
  bool generic = false;

  bool operator==(const ConcomitantForm&) const = default;
};

/// Evaluates `expr` at F by contracting one umbral letter at a time: each
/// factor is multiplied in, and as soon as all factors mentioning a letter
/// are present, its degree-4 monomials sigma^I are replaced by b_I (numeric)
/// or a_I (generic). Throws std::invalid_argument for an invalid expression.
ConcomitantForm umbral_evaluate(const SymbolicExpression& expr, const UmbralTarget& target);

/// Umbral substitution applied to an already expanded polynomial: every term
/// must have degree 0 or 4 in each letter. This is the literal definition and
/// is used as the reference route for umbral_evaluate.
Polynomial umbral_substitute(const Polynomial& expanded, const UmbralTarget& target);

/// Substitutes the normalized coefficients of F for the a-variables of a
/// generic form.
ConcomitantForm specialize(const ConcomitantForm& generic, const TernaryQuartic& f);

inline bool is_identically_zero(const ConcomitantForm& c) { return c.value.is_zero(); }

/// scalar * (product of forms).
struct FormProduct {
  Rational scalar;
  std::vector<ConcomitantForm> forms;
};

/// Sum of the products. Every addend must have the same total signature and
/// all forms must agree on generic vs numeric; otherwise
/// std::invalid_argument.
ConcomitantForm form_combine(const std::vector<FormProduct>& terms);

/// Rank of the span of all x,u-coefficients of the given generic forms, each
/// viewed as a vector over the degree-`degree` monomials in a. Throws
/// std::invalid_argument for numeric forms or mismatched a-degrees.
std::size_t coefficient_span_rank(const std::vector<ConcomitantForm>& generic_forms, unsigned degree);
std::size_t coefficient_span_rank(const std::vector<SymbolicExpression>& exprs, unsigned degree);

} // namespace waring

#endif
