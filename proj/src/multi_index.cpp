#include "waring/multi_index.hpp"

#include <regex>
#include <stdexcept>
#include <vector>

namespace waring {

long MultiIndex::factorial_product() const {
  auto fact = [](int n) {
    long r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
  };
  return fact(i0) * fact(i1) * fact(i2);
}

std::string MultiIndex::to_string() const {
  return "(" + std::to_string(i0) + "," + std::to_string(i1) + "," + std::to_string(i2) + ")";
}

namespace {

constexpr int kMaxTabulatedDegree = 12;

std::vector<MultiIndex> build_degree(int d) {
  std::vector<MultiIndex> out;
  for (int i0 = d; i0 >= 0; --i0)
    for (int i1 = d - i0; i1 >= 0; --i1) out.push_back({i0, i1, d - i0 - i1});
  return out;
}

const std::vector<std::vector<MultiIndex>>& table() {
  static const std::vector<std::vector<MultiIndex>> t = [] {
    std::vector<std::vector<MultiIndex>> v;
    for (int d = 0; d <= kMaxTabulatedDegree; ++d) v.push_back(build_degree(d));
    return v;
  }();
  return t;
}

} // namespace

std::span<const MultiIndex> monomials_of_degree(int degree) {
  if (degree < 0 || degree > kMaxTabulatedDegree)
    throw std::invalid_argument("monomials_of_degree: degree out of range");
  return table()[static_cast<std::size_t>(degree)];
}

std::size_t monomial_position(const MultiIndex& index) {
  if (index.i0 < 0 || index.i1 < 0 || index.i2 < 0)
    throw std::invalid_argument("monomial_position: negative exponent");
  // Indices with i0 > j precede the block of i0 = j; within a block, i1 descends.
  const int d = index.degree();
  std::size_t pos = 0;
  for (int j = d; j > index.i0; --j) pos += static_cast<std::size_t>(d - j + 1);
  pos += static_cast<std::size_t>(d - index.i0 - index.i1);
  return pos;
}

MultiIndex parse_multi_index(const std::string& text) {
  static const std::regex re(R"(\s*\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw std::invalid_argument("malformed multi-index '" + text + "'");
  return {std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3])};
}

} // namespace waring
