#ifndef WARING_SYMBOLIC_HPP
#define WARING_SYMBOLIC_HPP

#include "waring/errors.hpp"
#include "waring/polynomial.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace waring {

enum class AtomKind : std::uint8_t {
  Contraction, // sigma_x = sigma0 x0 + sigma1 x1 + sigma2 x2
  BracketSSS,  // [sigma tau rho], determinant with rows in listed order
  BracketSSU,  // [sigma tau u]
};

/// One factor of a symbolic product, raised to `exponent`. Symbols are
/// umbral letter ids 0..5 (alpha..zeta, written a..f).
struct SymbolicAtom {
  AtomKind kind = AtomKind::Contraction;
  std::array<std::uint8_t, 3> symbols{};
  unsigned exponent = 1;

  std::size_t arity() const;
  bool mentions(std::uint8_t symbol) const;
  /// Symbol degree contributed by this atom (exponent if mentioned).
  unsigned degree_in(std::uint8_t symbol) const { return mentions(symbol) ? exponent : 0; }
  unsigned x_degree() const { return kind == AtomKind::Contraction ? exponent : 0; }
  unsigned u_degree() const { return kind == AtomKind::BracketSSU ? exponent : 0; }

  /// Same factor ignoring exponent.
  bool same_base(const SymbolicAtom& other) const { return kind == other.kind && symbols == other.symbols; }
  std::string to_string() const;

  auto operator<=>(const SymbolicAtom&) const = default;
};

/// Degree d in the coefficients, order m (x-degree) and class n (u-degree).
struct Signature {
  unsigned degree = 0;
  unsigned order = 0;
  unsigned klass = 0;

  std::string to_string() const;
  auto operator<=>(const Signature&) const = default;
};

/// Product of symbolic atoms in normal form: atoms sorted, equal bases merged.
class SymbolicExpression {
public:
  SymbolicExpression() = default;
  /// Throws std::invalid_argument for a bracket with a repeated symbol, a
  /// symbol id past zeta, or a zero exponent.
  explicit SymbolicExpression(std::vector<SymbolicAtom> atoms);

  const std::vector<SymbolicAtom>& atoms() const { return atoms_; }
  /// Distinct umbral letters used, ascending.
  std::vector<std::uint8_t> symbols() const;
  unsigned symbol_degree(std::uint8_t symbol) const;

  /// Normal form, e.g. "a_x^2 b_x^2 [abu]^2"; parse_symbolic reads it back.
  std::string to_string() const;

  /// Renames umbral letters by `perm[old] = new`.
  SymbolicExpression relabel(const std::array<std::uint8_t, 6>& perm) const;

  bool operator==(const SymbolicExpression&) const = default;

private:
  std::vector<SymbolicAtom> atoms_;
};

/// Grammar:
///   expr   := factor ( ('*' | whitespace) factor )*
///   factor := base ( '^' integer )?
///   base   := letter '_x' | '[' letter letter letter ']' | '[' letter letter 'u' ']'
///   letter := 'a'..'f'    (alpha..zeta)
/// Throws ParseError.
SymbolicExpression parse_symbolic(std::string_view text);

/// Throws std::invalid_argument when some letter does not have total degree 4.
Signature signature(const SymbolicExpression& expr);

/// Polynomial of a single atom (exponent applied) in umbral, x and u variables.
Polynomial atom_polynomial(const SymbolicAtom& atom);

/// Full expansion in umbral-component, x and u variables.
Polynomial expand(const SymbolicExpression& expr);

} // namespace waring

#endif
