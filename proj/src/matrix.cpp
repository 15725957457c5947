#include "waring/matrix.hpp"

#include <sstream>
#include <unordered_map>
#include <stdexcept>
#include <utility>

namespace waring {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  if (rows.empty()) return {};
  RationalMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  RationalMatrix p(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) p(i, j) += a * other(k, j);
    }
  return p;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector product: dimension mismatch");
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

std::string RationalMatrix::to_string() const {
  std::vector<std::string> cells(data_.size());
  std::size_t width = 1;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    cells[i] = waring::to_string(data_[i]);
    width = std::max(width, cells[i].size());
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out << "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& s = cells[r * cols_ + c];
      out << (c ? " " : "") << std::string(width - s.size(), ' ') << s;
    }
    out << "]\n";
  }
  return out.str();
}

namespace {

std::size_t bit_size(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

} // namespace

RowEchelon row_echelon(RationalMatrix m) {
  RowEchelon out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t best = rows;
    for (std::size_t r = lead; r < rows; ++r)
      if (m(r, c) != 0 && (best == rows || bit_size(m(r, c)) < bit_size(m(best, c)))) best = r;
    if (best == rows) continue;
    if (best != lead)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(best, j), m(lead, j));

    const Rational inv = 1 / m(lead, c);
    for (std::size_t j = c; j < cols; ++j)
      if (m(lead, j) != 0) m(lead, j) *= inv;

    std::vector<std::size_t> support;
    for (std::size_t j = c + 1; j < cols; ++j)
      if (m(lead, j) != 0) support.push_back(j);

    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || m(r, c) == 0) continue;
      const Rational factor = m(r, c);
      for (std::size_t j : support) m(r, j) -= factor * m(lead, j);
      m(r, c) = 0;
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  // Eliminating along the shorter side is cheaper; rank is transpose-invariant.
  if (m.rows() > m.cols()) return row_echelon(m.transpose()).pivots.size();
  return row_echelon(m).pivots.size();
}

std::vector<RationalVector> kernel(const RationalMatrix& m) {
  const RowEchelon e = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = n;
    for (std::size_t r = c; r < n; ++r)
      if (a(r, c) != 0 && (best == n || bit_size(a(r, c)) < bit_size(a(best, c)))) best = r;
    if (best == n) return 0;
    if (best != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(a(best, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      const Rational factor = a(r, c) / a(c, c);
      for (std::size_t j = c + 1; j < n; ++j) a(r, j) -= factor * a(c, j);
    }
  }
  return det;
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return Polynomial(1);
  if (n > 20) throw std::invalid_argument("polynomial determinant: matrix too large");
  // minor(mask) = determinant of rows n-|mask|..n-1 against the columns in mask.
  std::unordered_map<std::uint32_t, Polynomial> memo;
  auto minor = [&](auto&& self, std::uint32_t mask) -> Polynomial {
    if (mask == 0) return Polynomial(1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const std::size_t row = n - static_cast<std::size_t>(__builtin_popcount(mask));
    Polynomial total;
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (1U << c))) continue;
      if (!m[row][c].is_zero()) {
        Polynomial term = m[row][c] * self(self, mask & ~(1U << c));
        if (sign > 0)
          total += term;
        else
          total -= term;
      }
      sign = -sign;
    }
    memo.emplace(mask, total);
    return total;
  };
  return minor(minor, (1U << n) - 1U);
}

} // namespace waring
