#ifndef WARING_QUARTIC_HPP
#define WARING_QUARTIC_HPP

#include "waring/multi_index.hpp"
#include "waring/polynomial.hpp"
#include "waring/rational.hpp"

#include <array>
#include <string>

namespace waring {

/// Ternary quartic F = sum c_I x^I in the plain monomial basis.
///
/// The umbral letters act on the normalized coefficients
/// b_I = c_I * i0! i1! i2! / 4!, so that F = (a0 x0 + a1 x1 + a2 x2)^4
/// symbolically with a^I standing for b_I.
class TernaryQuartic {
public:
  static constexpr std::size_t kNumCoefficients = 15;

  TernaryQuartic() = default;
  explicit TernaryQuartic(const std::array<Rational, kNumCoefficients>& coeffs) : coeffs_(coeffs) {}

  /// Throws std::invalid_argument unless p is a homogeneous quartic in x.
  static TernaryQuartic from_polynomial(const Polynomial& p);
  static TernaryQuartic from_normalized(const std::array<Rational, kNumCoefficients>& b);

  const Rational& coeff(std::size_t id) const { return coeffs_.at(id); }
  const Rational& coeff(const MultiIndex& index) const;
  void set_coeff(const MultiIndex& index, const Rational& value);

  Rational normalized(std::size_t id) const;
  std::array<Rational, kNumCoefficients> normalized() const;

  bool is_zero() const;
  Polynomial to_polynomial() const;
  /// Composition F(g x): x_i is replaced by sum_j g[i][j] x_j.
  TernaryQuartic compose_linear(const std::array<std::array<Rational, 3>, 3>& g) const;

  TernaryQuartic operator+(const TernaryQuartic& other) const;
  TernaryQuartic operator*(const Rational& scalar) const;

  /// Expression in x0, x1, x2 that the quartic parser reads back exactly.
  std::string to_string() const;

  bool operator==(const TernaryQuartic&) const = default;

private:
  std::array<Rational, kNumCoefficients> coeffs_{};
};

/// F expressed as a polynomial in the generic coefficient variables:
/// sum_I (4!/I!) a_I x^I, where a_I stands for the normalized coefficient.
Polynomial generic_quartic();

} // namespace waring

#endif
