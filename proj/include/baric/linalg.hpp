#pragma once

// Dense exact linear algebra over a field (FieldElement in practice).

#include <cassert>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "baric/numberfield.hpp"

namespace baric {

template <class F> using Vector = std::vector<F>;

template <class F> class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = F(1);
    return m;
  }

  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(std::size_t rows, const std::vector<Vector<F>> &cols) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      assert(cols[j].size() == rows);
      for (std::size_t i = 0; i < rows; ++i)
        m(i, j) = cols[j][i];
    }
    return m;
  }

  static Matrix from_rows(std::size_t cols, const std::vector<Vector<F>> &rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      assert(rows[i].size() == cols);
      for (std::size_t j = 0; j < cols; ++j)
        m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  F &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F &operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Vector<F> row(std::size_t i) const {
    return Vector<F>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  Vector<F> column(std::size_t j) const {
    Vector<F> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      c[i] = (*this)(i, j);
    return c;
  }

  bool is_zero() const {
    for (const auto &x : data_)
      if (!x.is_zero())
        return false;
    return true;
  }

  friend bool operator==(const Matrix &a, const Matrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator+(const Matrix &a, const Matrix &b) {
    Matrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k)
      r.data_[k] += b.data_[k];
    return r;
  }
  friend Matrix operator-(const Matrix &a, const Matrix &b) {
    Matrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k)
      r.data_[k] -= b.data_[k];
    return r;
  }
  friend Matrix operator*(const F &s, const Matrix &a) {
    Matrix r = a;
    for (auto &x : r.data_)
      x *= s;
    return r;
  }
  friend Matrix operator*(const Matrix &a, const Matrix &b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("matrix product: shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F &aik = a(i, k);
        if (aik.is_zero())
          continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          r(i, j) += aik * b(k, j);
      }
    return r;
  }
  friend Vector<F> operator*(const Matrix &a, const Vector<F> &v) {
    if (a.cols_ != v.size())
      throw std::invalid_argument("matrix-vector product: shape mismatch");
    Vector<F> r(a.rows_, F(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (!v[k].is_zero())
          r[i] += a(i, k) * v[k];
    return r;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

/// In-place reduced row echelon form. Returns pivot column indices.
template <class F> std::vector<std::size_t> rref(Matrix<F> &m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero())
      ++p;
    if (p == m.rows())
      continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m(p, j), m(r, j));
    F inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j)
      m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero())
        continue;
      F f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F> std::size_t rank(Matrix<F> m) { return rref(m).size(); }

/// Basis of {v : m v = 0}, one vector per free column with a 1 there.
template <class F> std::vector<Vector<F>> nullspace(Matrix<F> m) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots)
    is_pivot[p] = true;
  std::vector<Vector<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free])
      continue;
    Vector<F> v(m.cols(), F(0));
    v[free] = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Reduces a list of vectors to the reduced echelon basis of their span.
template <class F>
std::vector<Vector<F>> echelon_basis(const std::vector<Vector<F>> &vs,
                                     std::size_t dim) {
  if (vs.empty())
    return {};
  Matrix<F> m = Matrix<F>::from_rows(dim, vs);
  auto pivots = rref(m);
  std::vector<Vector<F>> out;
  for (std::size_t r = 0; r < pivots.size(); ++r)
    out.push_back(m.row(r));
  return out;
}

/// Some solution of m x = b, or nullopt when inconsistent. Free variables
/// are set to zero.
template <class F>
std::optional<Vector<F>> solve(const Matrix<F> &m, const Vector<F> &b) {
  Matrix<F> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols())
    return std::nullopt;
  Vector<F> x(m.cols(), F(0));
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = aug(r, m.cols());
  return x;
}

template <class F> std::optional<Matrix<F>> invert(const Matrix<F> &m) {
  const std::size_t n = m.rows();
  if (m.cols() != n)
    throw std::invalid_argument("invert: matrix is not square");
  Matrix<F> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = m(i, j);
    aug(i, n + i) = F(1);
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    return std::nullopt;
  Matrix<F> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv(i, j) = aug(i, n + j);
  return inv;
}

} // namespace baric
