#include "sparsetrace/rational_matrix.hpp"

#include <sstream>

#include "sparsetrace/errors.hpp"
#include "sparsetrace/int_matrix.hpp"

namespace sparsetrace {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Rational RationalMatrix::trace() const {
  if (rows_ != cols_) throw DomainError("trace of a non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw DomainError("matrix sum dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix difference dimension mismatch");
  RationalMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product dimension mismatch");
  RationalMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

std::string RationalMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? " " : "") << (*this)(i, j).get_str();
    out << "\n";
  }
  return out.str();
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  IntegerMatrix a(n, n);
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j) l = lcm(l, Integer(m(i, j).get_den()));
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
    scale *= l;
  }
  Rational d(determinant(a), scale);
  d.canonicalize();
  return d;
}

namespace {

// Gauss-Jordan on [A | B]; returns the rank of A.
std::size_t eliminate(RationalMatrix& a, RationalMatrix* b) {
  const std::size_t r = a.rows(), c = a.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < c && row < r; ++col) {
    std::size_t p = row;
    while (p < r && a(p, col) == 0) ++p;
    if (p == r) continue;
    if (p != row) {
      for (std::size_t j = 0; j < c; ++j) std::swap(a(p, j), a(row, j));
      if (b)
        for (std::size_t j = 0; j < b->cols(); ++j) std::swap((*b)(p, j), (*b)(row, j));
    }
    Rational inv = 1 / a(row, col);
    for (std::size_t j = col; j < c; ++j) a(row, j) *= inv;
    if (b)
      for (std::size_t j = 0; j < b->cols(); ++j) (*b)(row, j) *= inv;
    for (std::size_t i = 0; i < r; ++i) {
      if (i == row || a(i, col) == 0) continue;
      Rational f = a(i, col);
      for (std::size_t j = col; j < c; ++j) a(i, j) -= f * a(row, j);
      if (b)
        for (std::size_t j = 0; j < b->cols(); ++j) (*b)(i, j) -= f * (*b)(row, j);
    }
    ++row;
  }
  return row;
}

}  // namespace

std::size_t matrix_rank(const RationalMatrix& m) {
  RationalMatrix a = m;
  return eliminate(a, nullptr);
}

RationalMatrix solve(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != a.rows()) throw DomainError("solve dimension mismatch");
  RationalMatrix x = a, y = b;
  if (eliminate(x, &y) != a.rows()) throw ZeroDivisorError("singular matrix");
  return y;
}

RationalMatrix inverse(const RationalMatrix& a) { return solve(a, RationalMatrix::identity(a.rows())); }

}  // namespace sparsetrace
