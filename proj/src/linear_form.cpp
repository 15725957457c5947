#include "waring/linear_form.hpp"

#include "waring/matrix.hpp"

#include <stdexcept>

namespace waring {

LinearForm::LinearForm(Rational p0, Rational p1, Rational p2) : coords_{std::move(p0), std::move(p1), std::move(p2)} {
  if (coords_[0] == 0 && coords_[1] == 0 && coords_[2] == 0) throw std::invalid_argument("zero linear form");
}

Polynomial LinearForm::to_polynomial() const {
  Polynomial p;
  for (std::size_t i = 0; i < 3; ++i) p += coords_[i] * Polynomial::variable(Variable::x(i));
  return p;
}

bool LinearForm::proportional_to(const LinearForm& other) const {
  // All 2x2 minors of the 2x3 matrix vanish.
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (coords_[i] * other.coords_[j] != coords_[j] * other.coords_[i]) return false;
  return true;
}

std::string LinearForm::to_string() const {
  return "(" + waring::to_string(coords_[0]) + "," + waring::to_string(coords_[1]) + "," +
         waring::to_string(coords_[2]) + ")";
}

bool linearly_independent(std::span<const LinearForm> forms) {
  if (forms.size() > 3) return false;
  RationalMatrix m(forms.size(), 3);
  for (std::size_t r = 0; r < forms.size(); ++r)
    for (std::size_t c = 0; c < 3; ++c) m(r, c) = forms[r][c];
  return rank(m) == forms.size();
}

} // namespace waring
