#ifndef WARING_GENERATORS_HPP
#define WARING_GENERATORS_HPP

#include "waring/linear_form.hpp"
#include "waring/quartic.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace waring {

inline constexpr int kDefaultHeight = 9;

/// L_1^4 + ... + L_s^4. Throws std::invalid_argument for an empty list.
TernaryQuartic power_sum(std::span<const LinearForm> forms);

/// A power sum together with the forms it was built from.
struct PowerSumSample {
  TernaryQuartic form;
  std::vector<LinearForm> summands;
};

/// s linear forms with integer coordinates uniform in [-height, height],
/// redrawn until pairwise non-proportional, and their power sum.
/// Deterministic in (s, seed, height). Throws for s outside 1..6 or height < 1.
PowerSumSample random_power_sum(int s, std::uint64_t seed, int height = kDefaultHeight);

inline TernaryQuartic random_in_Ws(int s, std::uint64_t seed, int height = kDefaultHeight) {
  return random_power_sum(s, seed, height).form;
}

/// Quartic with all 15 coefficients uniform in [-height, height], never zero.
TernaryQuartic random_quartic(std::uint64_t seed, int height = kDefaultHeight);

/// Random integer matrix with determinant +-1 (product of elementary moves).
std::array<std::array<Rational, 3>, 3> random_unimodular(std::uint64_t seed);

/// x0^4 + x1^4 + x2^4 + (x0 + x1 + x2)^4, a member of W_4.
TernaryQuartic capolary_sample();
/// capolary_sample() + (x0 - x1 + x2)^4, a member of W_5.
TernaryQuartic clebsch_sample();

/// Named degenerate and sample forms:
///   cusp      x0^3 x1 (in W_2, not in the open part)
///   binary    x0^4 + x1^4
///   binary3   a fixed random binary quartic with alpha_2 of rank 3
///   veronese  x0^4
///   capolary, clebsch as above
std::map<std::string, TernaryQuartic> degenerate_samples();

} // namespace waring

#endif
