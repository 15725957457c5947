#ifndef WARING_MULTI_INDEX_HPP
#define WARING_MULTI_INDEX_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <string>

namespace waring {

/// Exponent triple (i0, i1, i2) of a ternary monomial.
struct MultiIndex {
  int i0 = 0;
  int i1 = 0;
  int i2 = 0;

  constexpr int degree() const { return i0 + i1 + i2; }
  constexpr int operator[](std::size_t k) const { return k == 0 ? i0 : (k == 1 ? i1 : i2); }
  constexpr MultiIndex operator+(const MultiIndex& o) const { return {i0 + o.i0, i1 + o.i1, i2 + o.i2}; }

  /// Multinomial factor i0! i1! i2!.
  long factorial_product() const;

  /// "(i0,i1,i2)"
  std::string to_string() const;

  auto operator<=>(const MultiIndex&) const = default;
};

/// All multi-indices of the given degree, lexicographically descending:
/// (k,0,0), (k-1,1,0), (k-1,0,1), (k-2,2,0), ...
std::span<const MultiIndex> monomials_of_degree(int degree);

/// Position of `index` in monomials_of_degree(index.degree()).
std::size_t monomial_position(const MultiIndex& index);

/// Parses "(i0,i1,i2)" with optional spaces. Throws std::invalid_argument.
MultiIndex parse_multi_index(const std::string& text);

} // namespace waring

#endif
