#ifndef WARING_RATIONAL_HPP
#define WARING_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace waring {

/// Exact rational number. GMP keeps every result in lowest terms with a
/// positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// num/den in lowest terms (the two-argument mpq_class constructor does not
/// canonicalize). Throws std::invalid_argument for den == 0.
Rational make_rational(long num, long den);

/// Parses "p", "-p" or "p/q" (whitespace around the slash is not allowed).
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, otherwise "p/q".
std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

Integer factorial(unsigned n);

} // namespace waring

#endif
