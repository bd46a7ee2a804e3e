#include "sparsetrace/int_matrix.hpp"

#include <limits>
#include <sstream>

#include "sparsetrace/errors.hpp"

namespace sparsetrace {

IntVector to_int_vector(const Point& p) {
  IntVector v;
  v.reserve(p.size());
  for (long x : p) v.emplace_back(x);
  return v;
}

Point to_point(const IntVector& v) {
  Point p;
  p.reserve(v.size());
  for (const auto& x : v) {
    if (!x.fits_slong_p()) throw DomainError("integer coordinate out of range");
    p.push_back(x.get_si());
  }
  return p;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DomainError("dot product of vectors of different length");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer vector_gcd(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DomainError("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntegerMatrix IntegerMatrix::from_points(const std::vector<Point>& rows, std::size_t cols) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DomainError("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntegerMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<long>(i * cols_),
                   data_.begin() + static_cast<long>((i + 1) * cols_));
}

std::vector<IntVector> IntegerMatrix::row_list() const {
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

void IntegerMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntegerMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product dimension mismatch");
  IntegerMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << (*this)(i, j).get_str();
    out << "]";
  }
  out << "]";
  return out.str();
}

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  SmithForm s{IntegerMatrix::identity(r), m, IntegerMatrix::identity(c), 0};
  IntegerMatrix& D = s.D;
  std::size_t t = 0;
  for (; t < std::min(r, c); ++t) {
    while (true) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = r, pj = c;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (D(i, j) != 0 && (pi == r || abs(D(i, j)) < abs(D(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == r) {
        s.rank = t;
        goto done;
      }
      D.swap_rows(t, pi);
      s.U.swap_rows(t, pi);
      D.swap_cols(t, pj);
      s.V.swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (D(i, t) == 0) continue;
        Integer q = floor_div(D(i, t), D(t, t));
        D.add_row_multiple(i, t, -q);
        s.U.add_row_multiple(i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (D(t, j) == 0) continue;
        Integer q = floor_div(D(t, j), D(t, t));
        D.add_col_multiple(j, t, -q);
        s.V.add_col_multiple(j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // enforce divisibility of the remaining block by the pivot
      bool divisible = true;
      for (std::size_t i = t + 1; i < r && divisible; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (D(i, j) % D(t, t) != 0) {
            D.add_row_multiple(t, i, 1);
            s.U.add_row_multiple(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      s.U.negate_row(t);
    }
  }
  s.rank = t;
done:
  return s;
}

IntegerMatrix hermite_normal_form(const IntegerMatrix& m) {
  IntegerMatrix h = m;
  const std::size_t r = h.rows(), c = h.cols();
  std::size_t row = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < c && row < r; ++col) {
    // gcd-reduce the column below `row` into a single pivot
    while (true) {
      std::size_t best = r;
      for (std::size_t i = row; i < r; ++i)
        if (h(i, col) != 0 && (best == r || abs(h(i, col)) < abs(h(best, col)))) best = i;
      if (best == r) break;
      h.swap_rows(row, best);
      bool done = true;
      for (std::size_t i = row + 1; i < r; ++i) {
        if (h(i, col) == 0) continue;
        Integer q = floor_div(h(i, col), h(row, col));
        h.add_row_multiple(i, row, -q);
        if (h(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) h.negate_row(row);
    for (std::size_t i = 0; i < row; ++i) {
      Integer q = floor_div(h(i, col), h(row, col));
      h.add_row_multiple(i, row, -q);
    }
    pivots.push_back(col);
    ++row;
  }
  IntegerMatrix out(row, c);
  for (std::size_t i = 0; i < row; ++i)
    for (std::size_t j = 0; j < c; ++j) out(i, j) = h(i, j);
  return out;
}

std::size_t matrix_rank(const IntegerMatrix& m) { return hermite_normal_form(m).rows(); }

Integer determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntegerMatrix unimodular_inverse(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  // row-reduce [m | I] over the integers; unimodularity keeps pivots at +-1
  IntegerMatrix a(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n + i) = 1;
  }
  IntegerMatrix h = hermite_normal_form(a);
  if (h.rows() != n) throw DomainError("matrix is not unimodular");
  IntegerMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (h(i, i) != 1) throw DomainError("matrix is not unimodular");
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = h(i, n + j);
  }
  return inv;
}

std::vector<IntVector> left_kernel(const IntegerMatrix& m) {
  SmithForm s = smith_normal_form(m);
  std::vector<IntVector> out;
  for (std::size_t i = s.rank; i < m.rows(); ++i) out.push_back(s.U.row(i));
  return out;
}

}  // namespace sparsetrace
