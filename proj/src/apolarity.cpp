#include "waring/apolarity.hpp"

#include <stdexcept>

namespace waring {

namespace {

void check_nonzero(const TernaryQuartic& f) {
  if (f.is_zero()) throw std::invalid_argument("the zero form has no apolarity data");
}

Polynomial y_form(const RationalVector& coeffs, int degree) {
  const auto idx = monomials_of_degree(degree);
  std::vector<Term> terms;
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (coeffs[j] == 0) continue;
    Monomial m;
    for (std::size_t i = 0; i < 3; ++i) m.set(kSlotY + i, static_cast<unsigned>(idx[j][i]));
    terms.push_back({m, coeffs[j]});
  }
  return Polynomial::from_terms(std::move(terms));
}

/// Reduced echelon basis of the span of `vectors`, as degree-`degree` y-forms.
std::vector<Polynomial> echelon_forms(const std::vector<RationalVector>& vectors, int degree) {
  if (vectors.empty()) return {};
  const RowEchelon e = row_echelon(RationalMatrix::from_rows(vectors));
  std::vector<Polynomial> out;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    RationalVector row(e.reduced.cols());
    for (std::size_t c = 0; c < row.size(); ++c) row[c] = e.reduced(r, c);
    out.push_back(y_form(row, degree));
  }
  return out;
}

RationalMatrix evaluation_matrix(std::span<const LinearForm> points) {
  const auto idx = monomials_of_degree(4);
  RationalMatrix e(points.size(), idx.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) {
      Rational v = 1;
      for (std::size_t k = 0; k < 3; ++k)
        for (int p = 0; p < idx[j][k]; ++p) v *= points[i][k];
      e(i, j) = v;
    }
  return e;
}

} // namespace

CatalecticantMatrix catalecticant(const TernaryQuartic& f, int k) {
  if (k < 0 || k > 4) throw std::invalid_argument("catalecticant: k must lie in 0..4");
  CatalecticantMatrix c;
  c.k = k;
  const auto rows = monomials_of_degree(k);
  const auto cols = monomials_of_degree(4 - k);
  const auto b = f.normalized();
  c.entries = RationalMatrix(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t s = 0; s < cols.size(); ++s) c.entries(r, s) = b[monomial_position(rows[r] + cols[s])];
  return c;
}

std::vector<std::vector<Polynomial>> generic_catalecticant(int k) {
  if (k < 0 || k > 4) throw std::invalid_argument("catalecticant: k must lie in 0..4");
  const auto rows = monomials_of_degree(k);
  const auto cols = monomials_of_degree(4 - k);
  std::vector<std::vector<Polynomial>> m(rows.size(), std::vector<Polynomial>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t s = 0; s < cols.size(); ++s)
      m[r][s] = Polynomial::variable(Variable::a(monomial_position(rows[r] + cols[s])));
  return m;
}

RankProfile rank_profile(const TernaryQuartic& f) {
  check_nonzero(f);
  RankProfile p;
  for (int k = 1; k <= 3; ++k) p.ranks[static_cast<std::size_t>(k - 1)] = rank(catalecticant(f, k).entries);
  return p;
}

std::vector<Polynomial> apolar_forms(const TernaryQuartic& f, int k) {
  if (k < 1 || k > 4) throw std::invalid_argument("apolar_forms: k must lie in 1..4");
  check_nonzero(f);
  return echelon_forms(kernel(catalecticant(f, k).entries.transpose()), k);
}

bool annihilates(const Polynomial& g, const TernaryQuartic& f) {
  if (!g.uses_only({VarClass::y})) throw std::invalid_argument("annihilates: operator must be a form in y0, y1, y2");
  if (g.is_zero()) return true;
  const unsigned degree = g.max_degree(VarClass::y);
  if (!g.is_homogeneous(VarClass::y, degree)) throw std::invalid_argument("annihilates: operator is not homogeneous");
  if (degree > 4) throw std::invalid_argument("annihilates: operator degree exceeds 4");

  const Polynomial fp = f.to_polynomial();
  Polynomial result;
  for (const auto& t : g.terms()) {
    Polynomial d = fp;
    for (std::size_t i = 0; i < 3; ++i)
      for (unsigned e = 0; e < t.mono[kSlotY + i]; ++e) d = d.derivative(Variable::x(i));
    result += t.coef * d;
  }
  return result.is_zero();
}

std::vector<Polynomial> ideal_degree4(std::span<const LinearForm> points) {
  if (points.empty()) return echelon_forms(kernel(RationalMatrix(0, 15)), 4);
  return echelon_forms(kernel(evaluation_matrix(points)), 4);
}

bool reye_check(std::span<const LinearForm> points, const TernaryQuartic& f) {
  if (points.empty()) throw std::invalid_argument("reye_check: no points");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (points[i].proportional_to(points[j])) throw std::invalid_argument("reye_check: duplicate points");
  // alpha_{4,F} sends a quartic operator g to sum_J g_J b_J.
  const auto b = f.normalized();
  for (const auto& g : kernel(evaluation_matrix(points))) {
    Rational pairing = 0;
    for (std::size_t j = 0; j < g.size(); ++j) pairing += g[j] * b[j];
    if (pairing != 0) return false;
  }
  return true;
}

} // namespace waring
