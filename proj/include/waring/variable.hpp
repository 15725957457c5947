#ifndef WARING_VARIABLE_HPP
#define WARING_VARIABLE_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>

namespace waring {

/// Variable classes, in their global order.
///   a   : generic quartic coefficients, index = multi-index id 0..14
///   x   : point coordinates x0..x2
///   u   : dual-plane coordinates u0..u2
///   y   : differential-operator coordinates y0..y2 (apolar forms)
///   sym : umbral letter components, symbol id 0..5 (alpha..zeta), index 0..2
enum class VarClass : std::uint8_t { a, x, u, y, sym };

inline constexpr std::size_t kNumCoefficientVars = 15;
inline constexpr std::size_t kMaxSymbols = 6;
inline constexpr std::size_t kNumVariables = 15 + 3 + 3 + 3 + 3 * kMaxSymbols;

/// A variable of the fixed universe. Ordered by class, then symbol id, then
/// index; slot() is the position in that order.
struct Variable {
  VarClass cls = VarClass::x;
  std::uint8_t symbol = 0;
  std::uint8_t index = 0;

  static Variable a(std::size_t id);
  static Variable x(std::size_t i) { return {VarClass::x, 0, static_cast<std::uint8_t>(i)}; }
  static Variable u(std::size_t i) { return {VarClass::u, 0, static_cast<std::uint8_t>(i)}; }
  static Variable y(std::size_t i) { return {VarClass::y, 0, static_cast<std::uint8_t>(i)}; }
  static Variable sym(std::size_t symbol, std::size_t i);

  std::size_t slot() const;
  static Variable from_slot(std::size_t slot);

  /// a400, x0, u1, y2, or the umbral letter followed by the component
  /// (a0 would clash, so umbral components print as s<letter><i>, e.g. sb2).
  std::string name() const;

  auto operator<=>(const Variable& other) const { return slot() <=> other.slot(); }
  bool operator==(const Variable& other) const { return slot() == other.slot(); }
};

inline constexpr std::size_t kSlotA = 0;
inline constexpr std::size_t kSlotX = 15;
inline constexpr std::size_t kSlotU = 18;
inline constexpr std::size_t kSlotY = 21;
inline constexpr std::size_t kSlotSym = 24;

inline constexpr std::size_t sym_slot(std::size_t symbol, std::size_t i) { return kSlotSym + 3 * symbol + i; }

} // namespace waring

#endif
