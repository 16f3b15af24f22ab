#pragma once

// Exact dense linear algebra over the rationals: reduced row echelon form,
// rank, kernel and row-space bases.
//
// Elimination is fraction-free: rows are first cleared of denominators and
// the forward pass runs Bareiss elimination over the integers. Pivots are
// chosen deterministically (leftmost column with a nonzero entry, then the
// smallest row index), so bases come out identical across runs.

#include <cstddef>
#include <utility>
#include <vector>

#include "bianchi/rational.hpp"

namespace bianchi::linalg {

using RowVector = std::vector<Rational>;

class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static DenseMatrix from_rows(const std::vector<RowVector>& rows, std::size_t cols) {
    DenseMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    return m;
  }

  /// Matrix whose columns are the given vectors.
  static DenseMatrix from_columns(const std::vector<RowVector>& cols, std::size_t rows) {
    DenseMatrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RowVector row(std::size_t r) const {
    return RowVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct Echelon {
  DenseMatrix rref;                  // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

inline Echelon reduced_echelon(const DenseMatrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();

  // Clear denominators row by row; this does not change the row space.
  std::vector<std::vector<Integer>> a(nr, std::vector<Integer>(nc));
  for (std::size_t r = 0; r < nr; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < nc; ++c) l = boost::multiprecision::lcm(l, m(r, c).denominator());
    for (std::size_t c = 0; c < nc; ++c) {
      const Rational& v = m(r, c);
      a[r][c] = v.numerator() * (l / v.denominator());
    }
  }

  // Bareiss forward elimination.
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < nc && row < nr; ++col) {
    std::size_t p = row;
    while (p < nr && a[p][col] == 0) ++p;
    if (p == nr) continue;
    std::swap(a[p], a[row]);
    const Integer& piv = a[row][col];
    for (std::size_t r = row + 1; r < nr; ++r) {
      const Integer f = a[r][col];
      for (std::size_t c = col; c < nc; ++c) a[r][c] = (piv * a[r][c] - f * a[row][c]) / prev;
    }
    prev = piv;
    pivots.push_back(col);
    ++row;
  }

  // Back substitution in exact rationals.
  const std::size_t rank = pivots.size();
  DenseMatrix out(rank, nc);
  for (std::size_t r = 0; r < rank; ++r) {
    const Rational inv = Rational(1) / Rational(a[r][pivots[r]], 1);
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = Rational(a[r][c], 1) * inv;
  }
  for (std::size_t r = rank; r-- > 0;) {
    for (std::size_t above = 0; above < r; ++above) {
      const Rational f = out(above, pivots[r]);
      if (f.is_zero()) continue;
      for (std::size_t c = pivots[r]; c < nc; ++c) out(above, c) -= f * out(r, c);
    }
  }
  return {std::move(out), std::move(pivots)};
}

inline std::size_t rank(const DenseMatrix& m) { return reduced_echelon(m).rank(); }

/// Canonical basis of a span: the nonzero rows of the RREF of the stacked vectors.
inline std::vector<RowVector> row_space_basis(const std::vector<RowVector>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  Echelon e = reduced_echelon(DenseMatrix::from_rows(vectors, dim));
  std::vector<RowVector> out;
  for (std::size_t r = 0; r < e.rank(); ++r) out.push_back(e.rref.row(r));
  return out;
}

/// Basis of {x : m x = 0}, returned in reduced echelon form.
inline std::vector<RowVector> kernel_basis(const DenseMatrix& m) {
  const std::size_t nc = m.cols();
  Echelon e = reduced_echelon(m);
  std::vector<bool> is_pivot(nc, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RowVector> raw;
  for (std::size_t free = 0; free < nc; ++free) {
    if (is_pivot[free]) continue;
    RowVector v(nc);
    v[free] = 1;
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = -e.rref(r, free);
    raw.push_back(std::move(v));
  }
  return row_space_basis(raw, nc);
}

/// Basis of the column space of m, returned in reduced echelon form.
inline std::vector<RowVector> image_basis(const DenseMatrix& m) {
  std::vector<RowVector> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    RowVector v(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m(r, c);
    cols.push_back(std::move(v));
  }
  return row_space_basis(cols, m.rows());
}

inline bool in_span(const std::vector<RowVector>& basis, const RowVector& v, std::size_t dim) {
  if (basis.empty()) {
    for (const auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  }
  std::vector<RowVector> stacked = basis;
  stacked.push_back(v);
  return rank(DenseMatrix::from_rows(stacked, dim)) == rank(DenseMatrix::from_rows(basis, dim));
}

/// Greedily extends `base` by vectors of `pool`, returning only the added ones.
inline std::vector<RowVector> complement_basis(const std::vector<RowVector>& base,
                                               const std::vector<RowVector>& pool, std::size_t dim) {
  std::vector<RowVector> acc = base;
  std::vector<RowVector> added;
  std::size_t current = acc.empty() ? 0 : rank(DenseMatrix::from_rows(acc, dim));
  for (const auto& v : pool) {
    acc.push_back(v);
    std::size_t r = rank(DenseMatrix::from_rows(acc, dim));
    if (r > current) {
      current = r;
      added.push_back(v);
    } else {
      acc.pop_back();
    }
  }
  return added;
}

}  // namespace bianchi::linalg
