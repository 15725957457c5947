#include "waring/variable.hpp"

#include "waring/multi_index.hpp"

#include <stdexcept>

namespace waring {

Variable Variable::a(std::size_t id) {
  if (id >= kNumCoefficientVars) throw std::out_of_range("coefficient variable id out of range");
  return {VarClass::a, 0, static_cast<std::uint8_t>(id)};
}

Variable Variable::sym(std::size_t symbol, std::size_t i) {
  if (symbol >= kMaxSymbols || i >= 3) throw std::out_of_range("umbral variable out of range");
  return {VarClass::sym, static_cast<std::uint8_t>(symbol), static_cast<std::uint8_t>(i)};
}

std::size_t Variable::slot() const {
  switch (cls) {
  case VarClass::a: return kSlotA + index;
  case VarClass::x: return kSlotX + index;
  case VarClass::u: return kSlotU + index;
  case VarClass::y: return kSlotY + index;
  case VarClass::sym: return sym_slot(symbol, index);
  }
  return kNumVariables;
}

Variable Variable::from_slot(std::size_t slot) {
  if (slot < kSlotX) return a(slot);
  if (slot < kSlotU) return x(slot - kSlotX);
  if (slot < kSlotY) return u(slot - kSlotU);
  if (slot < kSlotSym) return y(slot - kSlotY);
  if (slot < kNumVariables) return sym((slot - kSlotSym) / 3, (slot - kSlotSym) % 3);
  throw std::out_of_range("variable slot out of range");
}

std::string Variable::name() const {
  switch (cls) {
  case VarClass::a: {
    const auto& m = monomials_of_degree(4)[index];
    return "a" + std::to_string(m.i0) + std::to_string(m.i1) + std::to_string(m.i2);
  }
  case VarClass::x: return "x" + std::to_string(index);
  case VarClass::u: return "u" + std::to_string(index);
  case VarClass::y: return "y" + std::to_string(index);
  case VarClass::sym: return std::string("s") + static_cast<char>('a' + symbol) + std::to_string(index);
  }
  return "?";
}

} // namespace waring
