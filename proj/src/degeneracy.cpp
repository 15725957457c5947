#include "waring/degeneracy.hpp"

#include "waring/matrix.hpp"

#include <stdexcept>

namespace waring {

long expected_codimension(int e, int s) {
  const long k = e - s;
  return k * (k + 1) / 2;
}

Integer degeneracy_degree(int e, int s, const std::vector<Rational>& chern) {
  if (s < 0 || s >= e) throw std::invalid_argument("degeneracy_degree: need 0 <= s < e");
  if (chern.size() < static_cast<std::size_t>(e) + 1 || chern[0] != 1)
    throw std::invalid_argument("degeneracy_degree: malformed Chern series");
  const int n = e - s;
  auto z = [&](int k) -> Rational { return (k < 0 || k > e) ? Rational(0) : chern[static_cast<std::size_t>(k)]; };
  RationalMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = z(n - 2 * i + j + 1);
  Rational degree = determinant(m);
  for (int k = 0; k < n; ++k) degree *= 2;
  if (!is_integer(degree)) throw std::domain_error("degeneracy_degree: non-integral degree " + to_string(degree));
  return degree.get_num();
}

std::vector<Rational> waring_chern_series() {
  std::vector<Rational> z;
  Integer binom = 1;
  for (unsigned k = 0; k <= 6; ++k) {
    if (k > 0) binom = binom * (6 - k + 1) / k;
    Rational v(binom);
    mpq_div_2exp(v.get_mpq_t(), v.get_mpq_t(), k);
    z.push_back(v);
  }
  return z;
}

Integer degree_of_Ws(int s) { return degeneracy_degree(6, s, waring_chern_series()); }

} // namespace waring
