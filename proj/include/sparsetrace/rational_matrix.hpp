#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sparsetrace/rational.hpp"

namespace sparsetrace {

/// Dense matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Rational trace() const;
  bool is_zero() const;

  RationalMatrix& operator+=(const RationalMatrix& o);
  RationalMatrix& operator*=(const Rational& c);
  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(RationalMatrix a, const Rational& c) { return a *= c; }
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Determinant: each row is scaled to integers, then fraction-free
/// Bareiss elimination runs over Z.
Rational determinant(const RationalMatrix& m);

std::size_t matrix_rank(const RationalMatrix& m);

/// Solves A X = B; throws ZeroDivisorError when A is singular.
RationalMatrix solve(const RationalMatrix& a, const RationalMatrix& b);

RationalMatrix inverse(const RationalMatrix& a);

}  // namespace sparsetrace
