#pragma once

#include <cstddef>
#include <vector>

#include "lfd/field.hpp"
#include "lfd/matrix.hpp"

namespace lfd {

template <ExactField F>
using FieldMatrix = Matrix<typename F::Element>;

template <ExactField F>
FieldMatrix<F> to_field(const F& k, const IntMatrix& m) {
  FieldMatrix<F> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = k.from_int(m(r, c));
  return out;
}

template <ExactField F>
FieldMatrix<F> identity(const F& k, std::size_t n) {
  FieldMatrix<F> m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = k.one();
  return m;
}

template <ExactField F>
FieldMatrix<F> multiply(const F& k, const FieldMatrix<F>& a, const FieldMatrix<F>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
  FieldMatrix<F> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t t = 0; t < a.cols(); ++t) {
      const auto& v = a(i, t);
      if (k.is_zero(v)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = k.add(c(i, j), k.mul(v, b(t, j)));
    }
  return c;
}

/// Reduces `m` in place to reduced row echelon form and returns the pivot
/// columns in increasing order. Pivot search scans rows top to bottom.
template <ExactField F>
std::vector<std::size_t> rref_in_place(const F& k, FieldMatrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && k.is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, row);
    const auto inv = k.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = k.mul(m(row, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || k.is_zero(m(r, col))) continue;
      const auto factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = k.sub(m(r, c), k.mul(factor, m(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <ExactField F>
std::size_t rank(const F& k, FieldMatrix<F> m) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && k.is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, row);
    const auto inv = k.inv(m(row, col));
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (k.is_zero(m(r, col))) continue;
      const auto factor = k.mul(m(r, col), inv);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = k.sub(m(r, c), k.mul(factor, m(row, c)));
    }
    ++row;
  }
  return row;
}

/// Columns form a basis of {x : m x = 0}; one column per free variable of the
/// reduced echelon form, with that free variable set to 1.
template <ExactField F>
FieldMatrix<F> nullspace(const F& k, FieldMatrix<F> m) {
  const auto pivots = rref_in_place(k, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  FieldMatrix<F> basis(m.cols(), m.cols() - pivots.size());
  std::size_t out = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(free, out) = k.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], out) = k.neg(m(i, free));
    ++out;
  }
  return basis;
}

/// Rows form a basis of {y : y m = 0}.
template <ExactField F>
FieldMatrix<F> left_nullspace(const F& k, const FieldMatrix<F>& m) {
  return nullspace(k, m.transposed()).transposed();
}

/// Determinant by row elimination, pivoting on the first nonzero entry below
/// the diagonal.
template <ExactField F>
typename F::Element det(const F& k, FieldMatrix<F> m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  auto result = k.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && k.is_zero(m(p, col))) ++p;
    if (p == n) return k.zero();
    if (p != col) {
      m.swap_rows(p, col);
      result = k.neg(result);
    }
    result = k.mul(result, m(col, col));
    const auto inv = k.inv(m(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (k.is_zero(m(r, col))) continue;
      const auto factor = k.mul(m(r, col), inv);
      for (std::size_t c = col; c < n; ++c) m(r, c) = k.sub(m(r, c), k.mul(factor, m(col, c)));
    }
  }
  return result;
}

/// Determinant by column operations, sweeping rows from the bottom and
/// pivoting on the last nonzero entry. Used to cross-check `det`.
template <ExactField F>
typename F::Element det_by_columns(const F& k, FieldMatrix<F> m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  auto result = k.one();
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t row = n - 1 - step;
    std::size_t p = row + 1;
    for (std::size_t c = row + 1; c-- > 0;) {
      if (!k.is_zero(m(row, c))) {
        p = c;
        break;
      }
    }
    if (p == row + 1) return k.zero();
    if (p != row) {
      m.swap_cols(p, row);
      result = k.neg(result);
    }
    result = k.mul(result, m(row, row));
    const auto inv = k.inv(m(row, row));
    for (std::size_t c = 0; c < row; ++c) {
      if (k.is_zero(m(row, c))) continue;
      const auto factor = k.mul(m(row, c), inv);
      for (std::size_t r = 0; r <= row; ++r) m(r, c) = k.sub(m(r, c), k.mul(factor, m(r, row)));
    }
  }
  return result;
}

template <ExactField F>
FieldMatrix<F> inverse(const F& k, const FieldMatrix<F>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  FieldMatrix<F> aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = k.one();
  }
  const auto pivots = rref_in_place(k, aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error("matrix is singular");
  FieldMatrix<F> out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
  return out;
}

// Fraction-free (Bareiss) routes over Q. Rows are scaled to integers first so
// intermediate entries stay integral and bounded by minors of the input.
std::size_t rank(const RationalField& k, FieldMatrix<RationalField> m);
mpq_class det(const RationalField& k, FieldMatrix<RationalField> m);

}  // namespace lfd
