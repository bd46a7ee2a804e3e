#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sparsetrace/polynomial.hpp"
#include "sparsetrace/rational.hpp"

namespace sparsetrace {

using IntVector = std::vector<Integer>;

IntVector to_int_vector(const Point& p);
/// Throws DomainError if an entry does not fit in a long.
Point to_point(const IntVector& v);
Integer dot(const IntVector& a, const IntVector& b);
Integer vector_gcd(const IntVector& v);

/// Dense integer matrix, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntegerMatrix from_points(const std::vector<Point>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  std::vector<IntVector> row_list() const;
  IntegerMatrix transpose() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct SmithForm {
  IntegerMatrix U;
  IntegerMatrix D;
  IntegerMatrix V;
  std::size_t rank = 0;
};

/// U * M * V = D with U, V unimodular and d_1 | d_2 | ... on the diagonal.
SmithForm smith_normal_form(const IntegerMatrix& m);

/// Row-style Hermite normal form with zero rows dropped: echelon, positive
/// pivots, entries above each pivot reduced into [0, pivot).
IntegerMatrix hermite_normal_form(const IntegerMatrix& m);

std::size_t matrix_rank(const IntegerMatrix& m);

/// Exact determinant (fraction-free Bareiss).
Integer determinant(const IntegerMatrix& m);

/// Inverse of a unimodular matrix.
IntegerMatrix unimodular_inverse(const IntegerMatrix& m);

/// Basis (as rows) of {x in Z^rows : x * M = 0}.
std::vector<IntVector> left_kernel(const IntegerMatrix& m);

}  // namespace sparsetrace
