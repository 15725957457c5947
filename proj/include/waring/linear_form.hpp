#ifndef WARING_LINEAR_FORM_HPP
#define WARING_LINEAR_FORM_HPP

#include "waring/polynomial.hpp"
#include "waring/rational.hpp"

#include <array>
#include <span>
#include <string>

namespace waring {

/// L = p0 x0 + p1 x1 + p2 x2, not identically zero. As a point of the dual
/// plane it is the class of (p0 : p1 : p2).
class LinearForm {
public:
  /// Throws std::invalid_argument for the zero vector.
  LinearForm(Rational p0, Rational p1, Rational p2);

  const Rational& operator[](std::size_t i) const { return coords_.at(i); }
  const std::array<Rational, 3>& coords() const { return coords_; }

  Polynomial to_polynomial() const;
  bool proportional_to(const LinearForm& other) const;
  std::string to_string() const;

  bool operator==(const LinearForm&) const = default;

private:
  std::array<Rational, 3> coords_;
};

/// True when the forms span a space of dimension forms.size().
bool linearly_independent(std::span<const LinearForm> forms);

} // namespace waring

#endif
