#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

namespace quivgr {

using Rational = mpq_class;

/// Dense row-major matrix. Zero rows or columns are allowed.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, T(0)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  T& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const T& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix p(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (int j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
      }
    return p;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix d = a;
    for (std::size_t i = 0; i < d.data_.size(); ++i) d.data_[i] -= b.data_[i];
    return d;
  }

  friend Matrix operator-(const Matrix& a) {
    Matrix d = a;
    for (auto& x : d.data_) x = -x;
    return d;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '(';
    for (int r = 0; r < m.rows_; ++r) {
      if (r) os << "; ";
      for (int c = 0; c < m.cols_; ++c) os << (c ? " " : "") << m(r, c);
    }
    return os << ')';
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using QVector = std::vector<Rational>;

struct RowEchelon {
  QMatrix reduced;          // reduced row echelon form
  std::vector<int> pivots;  // pivot column of each nonzero row
};

RowEchelon rref(QMatrix m);
int rank(const QMatrix& m);

/// Basis of {x : m x = 0}, one free variable per vector.
std::vector<QVector> nullspace(const QMatrix& m);

/// Columns of m at its pivot positions; a basis of the column space.
QMatrix column_basis(const QMatrix& m);

/// Some x with m x = b, or nullopt when inconsistent.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);

/// Inverse of a square invertible matrix; throws InvalidArgument otherwise.
QMatrix inverse(const QMatrix& m);

/// Matrix whose columns are the given vectors (all of length `rows`).
QMatrix from_columns(const std::vector<QVector>& columns, int rows);

}  // namespace quivgr
