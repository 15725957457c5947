#ifndef WARING_POLYNOMIAL_HPP
#define WARING_POLYNOMIAL_HPP

#include "waring/rational.hpp"
#include "waring/variable.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace waring {

/// Exponent vector over the fixed variable universe, indexed by slot.
class Monomial {
public:
  static constexpr std::size_t kWidth = 48;

  Monomial() = default;
  static Monomial of(Variable v, unsigned exponent = 1);

  std::uint8_t operator[](std::size_t slot) const { return exps_[slot]; }
  std::uint8_t exponent(Variable v) const { return exps_[v.slot()]; }
  void set(std::size_t slot, unsigned exponent);

  /// Product of monomials; throws std::overflow_error past 255 per variable.
  Monomial operator*(const Monomial& other) const;

  unsigned total_degree() const;
  unsigned degree(VarClass cls) const;
  bool is_one() const;
  std::size_t hash() const;

  std::string to_string() const;

  auto operator<=>(const Monomial&) const = default;

private:
  std::array<std::uint8_t, kWidth> exps_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
  Monomial mono;
  Rational coef;
  bool operator==(const Term&) const = default;
};

/// Sparse polynomial with exact rational coefficients. Terms are kept sorted
/// by descending monomial (lexicographic in slot order) with no zero
/// coefficients, so structural equality is polynomial equality.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(const Rational& constant);
  Polynomial(long constant) : Polynomial(Rational(constant)) {}

  static Polynomial variable(Variable v);
  static Polynomial monomial(const Monomial& m, const Rational& coef);
  /// Builds from arbitrary (possibly repeated, possibly zero) terms.
  static Polynomial from_terms(std::vector<Term> terms);
  /// Adopts terms that are already sorted descending, distinct and nonzero.
  static Polynomial from_canonical(std::vector<Term> terms);

  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coefficient(const Monomial& m) const;
  /// Constant term (coefficient of the unit monomial).
  Rational constant_term() const { return coefficient(Monomial{}); }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);
  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }

  Polynomial pow(unsigned exponent) const;

  /// Simultaneous substitution; unbound variables are retained.
  Polynomial substitute(const std::map<Variable, Polynomial>& bindings) const;
  /// Evaluation with every occurring variable bound; throws
  /// std::invalid_argument if an occurring variable is unbound.
  Rational evaluate(const std::map<Variable, Rational>& values) const;

  Polynomial derivative(Variable v) const;

  /// Maximum and minimum degree of the terms in the given class (0 if zero).
  unsigned max_degree(VarClass cls) const;
  unsigned min_degree(VarClass cls) const;
  /// True when every term has degree exactly `degree` in `cls`.
  bool is_homogeneous(VarClass cls, unsigned degree) const;
  /// True when no term involves a variable outside `classes`.
  bool uses_only(std::initializer_list<VarClass> classes) const;

  /// Human-readable form, terms in storage order, e.g. "3/2*x0^2*u1 - x1".
  std::string to_string() const;

  bool operator==(const Polynomial&) const = default;

private:
  std::vector<Term> terms_;
};

/// Product of p and q where each product term (m, c) is passed through
/// `transform` before accumulation; a false return discards the term. Used
/// to fuse umbral contraction into multiplication.
using TermTransform = std::function<bool(Monomial&, Rational&)>;
Polynomial multiply_transform(const Polynomial& p, const Polynomial& q, const TermTransform& transform);

/// Applies `transform` to every term of p and recollects.
Polynomial map_terms(const Polynomial& p, const TermTransform& transform);

} // namespace waring

#endif
