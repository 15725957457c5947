#ifndef WARING_MATRIX_HPP
#define WARING_MATRIX_HPP

#include "waring/polynomial.hpp"
#include "waring/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace waring {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& other) const;
  RationalVector operator*(const RationalVector& v) const;
  bool is_zero() const;

  std::string to_string() const;

  bool operator==(const RationalMatrix&) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form together with its pivot columns.
struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;
};

/// Exact Gauss-Jordan elimination. Pivot rows are chosen per column as the
/// candidate with the smallest numerator-plus-denominator bit size.
RowEchelon row_echelon(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

/// Basis of the right kernel, one vector per free column, with the free
/// coordinate equal to 1 and free columns in increasing order.
std::vector<RationalVector> kernel(const RationalMatrix& m);

/// Throws std::invalid_argument for non-square input.
Rational determinant(const RationalMatrix& m);

/// Determinant of a square matrix of polynomials, by Laplace expansion along
/// rows with memoized minors (2^n subsets; intended for n <= 10).
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m);

} // namespace waring

#endif
