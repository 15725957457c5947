#include "waring/generators.hpp"

#include "waring/apolarity.hpp"

#include <random>
#include <stdexcept>

namespace waring {

TernaryQuartic power_sum(std::span<const LinearForm> forms) {
  if (forms.empty()) throw std::invalid_argument("power_sum: empty list");
  Polynomial sum;
  for (const auto& l : forms) sum += l.to_polynomial().pow(4);
  return sum.is_zero() ? TernaryQuartic{} : TernaryQuartic::from_polynomial(sum);
}

PowerSumSample random_power_sum(int s, std::uint64_t seed, int height) {
  if (s < 1 || s > 6) throw std::invalid_argument("random_power_sum: s must lie in 1..6");
  if (height < 1) throw std::invalid_argument("random_power_sum: height must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-height, height);
  PowerSumSample out;
  while (static_cast<int>(out.summands.size()) < s) {
    const long p0 = coord(rng), p1 = coord(rng), p2 = coord(rng);
    if (p0 == 0 && p1 == 0 && p2 == 0) continue;
    LinearForm l(p0, p1, p2);
    bool fresh = true;
    for (const auto& m : out.summands) fresh = fresh && !m.proportional_to(l);
    if (fresh) out.summands.push_back(l);
  }
  out.form = power_sum(out.summands);
  return out;
}

TernaryQuartic random_quartic(std::uint64_t seed, int height) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-height, height);
  while (true) {
    std::array<Rational, TernaryQuartic::kNumCoefficients> c;
    for (auto& v : c) v = coef(rng);
    TernaryQuartic f(c);
    if (!f.is_zero()) return f;
  }
}

std::array<std::array<Rational, 3>, 3> random_unimodular(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<long> mult(-3, 3);
  std::array<std::array<Rational, 3>, 3> g{};
  for (std::size_t i = 0; i < 3; ++i) g[i][i] = 1;
  for (int step = 0; step < 12; ++step) {
    const auto i = static_cast<std::size_t>(pick(rng));
    const auto j = static_cast<std::size_t>(pick(rng));
    if (i == j) continue;
    const long c = mult(rng);
    for (std::size_t k = 0; k < 3; ++k) g[i][k] += c * g[j][k];
  }
  return g;
}

TernaryQuartic capolary_sample() {
  const std::vector<LinearForm> forms{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
  return power_sum(forms);
}

TernaryQuartic clebsch_sample() {
  const std::vector<LinearForm> forms{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, -1, 1}};
  return power_sum(forms);
}

namespace {

TernaryQuartic binary_rank3_sample() {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<long> coef(-kDefaultHeight, kDefaultHeight);
  while (true) {
    TernaryQuartic f;
    for (int i0 = 4; i0 >= 0; --i0) f.set_coeff({i0, 4 - i0, 0}, coef(rng));
    if (!f.is_zero() && rank(catalecticant(f, 2).entries) == 3) return f;
  }
}

} // namespace

std::map<std::string, TernaryQuartic> degenerate_samples() {
  std::map<std::string, TernaryQuartic> out;
  TernaryQuartic cusp;
  cusp.set_coeff({3, 1, 0}, 1);
  TernaryQuartic binary;
  binary.set_coeff({4, 0, 0}, 1);
  binary.set_coeff({0, 4, 0}, 1);
  TernaryQuartic veronese;
  veronese.set_coeff({4, 0, 0}, 1);
  out.emplace("cusp", cusp);
  out.emplace("binary", binary);
  out.emplace("binary3", binary_rank3_sample());
  out.emplace("veronese", veronese);
  out.emplace("capolary", capolary_sample());
  out.emplace("clebsch", clebsch_sample());
  return out;
}

} // namespace waring
