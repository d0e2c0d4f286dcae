#pragma once

#include <cassert>
#include <optional>
#include <vector>

#include "gle/rational.hpp"

namespace gle {

template <class F>
using Vec = std::vector<F>;

/// Dense matrix over an exact field F (Rat, Gaussian, Scalar, CScalar).
template <class F>
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<F> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c), F(0)) {}

  F& at(int r, int c) { return a[size_t(r) * cols + c]; }
  const F& at(int r, int c) const { return a[size_t(r) * cols + c]; }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = F(1);
    return m;
  }

  Matrix transposed() const {
    Matrix t(cols, rows);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  Vec<F> row(int r) const { return Vec<F>(a.begin() + size_t(r) * cols, a.begin() + size_t(r + 1) * cols); }
  void set_row(int r, const Vec<F>& v) {
    assert(int(v.size()) == cols);
    std::copy(v.begin(), v.end(), a.begin() + size_t(r) * cols);
  }

  Matrix operator*(const Matrix& o) const {
    assert(cols == o.rows);
    Matrix r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        const F& x = at(i, k);
        if (is_zero(x)) continue;
        for (int j = 0; j < o.cols; ++j) r.at(i, j) += x * o.at(k, j);
      }
    return r;
  }

  Vec<F> apply(const Vec<F>& v) const {
    assert(int(v.size()) == cols);
    Vec<F> r(size_t(rows), F(0));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (!is_zero(at(i, j))) r[size_t(i)] += at(i, j) * v[size_t(j)];
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    Matrix r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    Matrix r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = r.a[i] - o.a[i];
    return r;
  }
  Matrix scaled(const F& c) const {
    Matrix r = *this;
    for (auto& x : r.a) x = x * c;
    return r;
  }
  bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

/// In-place reduced row echelon form; returns pivot columns.
template <class F>
std::vector<int> rref(Matrix<F>& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (!is_zero(m.at(i, c))) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    F inv = F(1) / m.at(r, c);
    for (int j = c; j < m.cols; ++j) m.at(r, j) = m.at(r, j) * inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || is_zero(m.at(i, c))) continue;
      F f = m.at(i, c);
      for (int j = c; j < m.cols; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
int rank(Matrix<F> m) {
  return int(rref(m).size());
}

/// Basis of the right kernel {v : M v = 0}.
template <class F>
std::vector<Vec<F>> kernel_basis(Matrix<F> m) {
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(size_t(m.cols), false);
  for (int c : pivots) is_pivot[size_t(c)] = true;
  std::vector<Vec<F>> basis;
  for (int c = 0; c < m.cols; ++c) {
    if (is_pivot[size_t(c)]) continue;
    Vec<F> v(size_t(m.cols), F(0));
    v[size_t(c)] = F(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[size_t(pivots[r])] = -m.at(int(r), c);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solve M x = b; returns nullopt if inconsistent (least-norm not attempted).
template <class F>
std::optional<Vec<F>> solve(const Matrix<F>& m, const Vec<F>& b) {
  Matrix<F> aug(m.rows, m.cols + 1);
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols) = b[size_t(r)];
  }
  std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
  Vec<F> x(size_t(m.cols), F(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[size_t(pivots[r])] = aug.at(int(r), m.cols);
  return x;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  assert(m.rows == m.cols);
  int n = m.rows;
  Matrix<F> aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = F(1);
  }
  std::vector<int> pivots = rref(aug);
  if (int(pivots.size()) != n || pivots.back() != n - 1) return std::nullopt;
  Matrix<F> inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
  return inv;
}

/// Incremental row space with membership test; rows kept reduced.
template <class F>
class SpanBasis {
 public:
  explicit SpanBasis(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  int rank() const { return int(rows_.size()); }
  const std::vector<Vec<F>>& rows() const { return rows_; }

  /// Returns true if v enlarged the span; the normalized new row is then
  /// rows().back().
  bool add(Vec<F> v) {
    reduce(v);
    int lead = leading(v);
    if (lead < 0) return false;
    F inv = F(1) / v[size_t(lead)];
    for (auto& x : v) x = x * inv;
    // Back-substitute into existing rows.
    for (auto& row : rows_) {
      F f = row[size_t(lead)];
      if (is_zero(f)) continue;
      for (int j = 0; j < dim_; ++j) row[size_t(j)] = row[size_t(j)] - f * v[size_t(j)];
    }
    rows_.push_back(std::move(v));
    return true;
  }

  bool contains(Vec<F> v) const {
    reduce(v);
    return leading(v) < 0;
  }

  /// Residue of v modulo the span.
  Vec<F> reduced(Vec<F> v) const {
    reduce(v);
    return v;
  }

  bool equals(const SpanBasis& o) const {
    if (rank() != o.rank()) return false;
    for (auto& r : rows_)
      if (!o.contains(r)) return false;
    return true;
  }

 private:
  int leading(const Vec<F>& v) const { return leading_of(v); }
  static int leading_of(const Vec<F>& v) {
    for (size_t j = 0; j < v.size(); ++j)
      if (!is_zero(v[j])) return int(j);
    return -1;
  }
  void reduce(Vec<F>& v) const {
    for (auto& row : rows_) {
      int lead = leading_of(row);
      F f = v[size_t(lead)];
      if (is_zero(f)) continue;
      for (int j = 0; j < dim_; ++j) v[size_t(j)] = v[size_t(j)] - f * row[size_t(j)];
    }
  }

  int dim_;
  std::vector<Vec<F>> rows_;
};

/// Fraction-free (Bareiss) determinant over the rationals.
Rat det_bareiss(Matrix<Rat> m);

/// All leading principal minors of a symmetric rational matrix are positive.
/// Returns the index (1-based) of the first non-positive minor, or 0 if
/// positive definite. Uses fraction-free elimination on a rescaled integer
/// matrix; rescaling by positive factors preserves signs.
int first_nonpositive_leading_minor(const Matrix<Rat>& m);

inline bool positive_definite(const Matrix<Rat>& m) {
  return first_nonpositive_leading_minor(m) == 0;
}

}  // namespace gle
