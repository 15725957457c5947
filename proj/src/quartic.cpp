#include "waring/quartic.hpp"

#include <stdexcept>

namespace waring {

namespace {

Monomial x_monomial(const MultiIndex& m) {
  Monomial mono;
  mono.set(kSlotX + 0, static_cast<unsigned>(m.i0));
  mono.set(kSlotX + 1, static_cast<unsigned>(m.i1));
  mono.set(kSlotX + 2, static_cast<unsigned>(m.i2));
  return mono;
}

Rational normalizer(std::size_t id) {
  return make_rational(monomials_of_degree(4)[id].factorial_product(), 24);
}

} // namespace

TernaryQuartic TernaryQuartic::from_polynomial(const Polynomial& p) {
  if (!p.uses_only({VarClass::x})) throw std::invalid_argument("quartic may only involve x0, x1, x2");
  if (!p.is_homogeneous(VarClass::x, 4)) throw std::invalid_argument("not a homogeneous quartic");
  TernaryQuartic f;
  for (const auto& t : p.terms()) {
    const MultiIndex m{t.mono[kSlotX], t.mono[kSlotX + 1], t.mono[kSlotX + 2]};
    f.coeffs_[monomial_position(m)] = t.coef;
  }
  return f;
}

TernaryQuartic TernaryQuartic::from_normalized(const std::array<Rational, kNumCoefficients>& b) {
  TernaryQuartic f;
  for (std::size_t i = 0; i < kNumCoefficients; ++i) f.coeffs_[i] = b[i] / normalizer(i);
  return f;
}

const Rational& TernaryQuartic::coeff(const MultiIndex& index) const {
  if (index.degree() != 4) throw std::invalid_argument("quartic coefficient index must have degree 4");
  return coeffs_[monomial_position(index)];
}

void TernaryQuartic::set_coeff(const MultiIndex& index, const Rational& value) {
  if (index.degree() != 4 || index.i0 < 0 || index.i1 < 0 || index.i2 < 0)
    throw std::invalid_argument("quartic coefficient index must have degree 4");
  coeffs_[monomial_position(index)] = value;
}

Rational TernaryQuartic::normalized(std::size_t id) const { return coeffs_.at(id) * normalizer(id); }

std::array<Rational, TernaryQuartic::kNumCoefficients> TernaryQuartic::normalized() const {
  std::array<Rational, kNumCoefficients> b;
  for (std::size_t i = 0; i < kNumCoefficients; ++i) b[i] = normalized(i);
  return b;
}

bool TernaryQuartic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

Polynomial TernaryQuartic::to_polynomial() const {
  std::vector<Term> terms;
  const auto idx = monomials_of_degree(4);
  for (std::size_t i = 0; i < kNumCoefficients; ++i)
    if (coeffs_[i] != 0) terms.push_back({x_monomial(idx[i]), coeffs_[i]});
  return Polynomial::from_terms(std::move(terms));
}

TernaryQuartic TernaryQuartic::compose_linear(const std::array<std::array<Rational, 3>, 3>& g) const {
  std::map<Variable, Polynomial> bind;
  for (std::size_t i = 0; i < 3; ++i) {
    Polynomial row;
    for (std::size_t j = 0; j < 3; ++j) row += g[i][j] * Polynomial::variable(Variable::x(j));
    bind[Variable::x(i)] = row;
  }
  const Polynomial composed = to_polynomial().substitute(bind);
  return composed.is_zero() ? TernaryQuartic{} : from_polynomial(composed);
}

TernaryQuartic TernaryQuartic::operator+(const TernaryQuartic& other) const {
  TernaryQuartic r;
  for (std::size_t i = 0; i < kNumCoefficients; ++i) r.coeffs_[i] = coeffs_[i] + other.coeffs_[i];
  return r;
}

TernaryQuartic TernaryQuartic::operator*(const Rational& scalar) const {
  TernaryQuartic r;
  for (std::size_t i = 0; i < kNumCoefficients; ++i) r.coeffs_[i] = coeffs_[i] * scalar;
  return r;
}

std::string TernaryQuartic::to_string() const {
  std::string out;
  const auto idx = monomials_of_degree(4);
  for (std::size_t i = 0; i < kNumCoefficients; ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    const Rational mag = abs(c);
    std::string mono;
    for (std::size_t k = 0; k < 3; ++k) {
      const int e = idx[i][k];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(k);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mag != 1) out += waring::to_string(mag) + "*";
    out += mono;
  }
  return out.empty() ? "0" : out;
}

Polynomial generic_quartic() {
  std::vector<Term> terms;
  const auto idx = monomials_of_degree(4);
  for (std::size_t i = 0; i < kNumCoefficientVars; ++i) {
    Monomial m = x_monomial(idx[i]);
    m.set(kSlotA + i, 1);
    terms.push_back({m, make_rational(24, idx[i].factorial_product())});
  }
  return Polynomial::from_terms(std::move(terms));
}

} // namespace waring
