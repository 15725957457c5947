#ifndef WARING_ERRORS_HPP
#define WARING_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace waring {

/// Malformed textual input. `position` is the 0-based offset of the
/// offending character.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

} // namespace waring

#endif
