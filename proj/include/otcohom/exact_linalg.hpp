/*
   Copyright 2026 The otcohom Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

// Exact linear algebra over any field-like scalar (Rational in practice).
// Pivots are chosen as the first nonzero entry, never by magnitude, so the
// results are exact and independent of any tolerance.

#include "otcohom/scalar.hpp"

#include <utility>
#include <vector>

namespace otcohom {

/// Reduces `m` in place to reduced row echelon form; returns the pivot columns.
template <typename Scalar>
std::vector<Eigen::Index> row_reduce(Matrix<Scalar>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = row;
    while (pivot < m.rows() && m(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    m.row(row) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == Scalar(0)) continue;
      const Scalar factor = m(r, col);
      m.row(r) -= factor * m.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename Scalar>
Eigen::Index rank(Matrix<Scalar> m) {
  return static_cast<Eigen::Index>(row_reduce(m).size());
}

template <typename Scalar>
Scalar determinant(Matrix<Scalar> m) {
  Scalar det(1);
  const Eigen::Index n = m.rows();
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && m(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      det = -det;
    }
    det *= m(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (m(r, col) == Scalar(0)) continue;
      const Scalar factor = m(r, col) / m(col, col);
      m.row(r) -= factor * m.row(col);
    }
  }
  return det;
}

/// Solves m x = b exactly for square invertible m; returns false if singular.
template <typename Scalar>
bool solve(const Matrix<Scalar>& m, const Vector<Scalar>& b, Vector<Scalar>& x) {
  const Eigen::Index n = m.rows();
  Matrix<Scalar> aug(n, n + 1);
  aug.leftCols(n) = m;
  aug.col(n) = b;
  auto pivots = row_reduce(aug);
  if (static_cast<Eigen::Index>(pivots.size()) < n || pivots.back() >= n) return false;
  x = aug.col(n);
  return true;
}

/// Canonical reduction of vectors modulo the span of a fixed set of rows.
///
/// Two vectors are congruent modulo the span iff their reductions are equal.
template <typename Scalar>
class SpanReducer {
 public:
  SpanReducer() = default;

  explicit SpanReducer(Matrix<Scalar> rows) : basis_(std::move(rows)) {
    pivots_ = row_reduce(basis_);
    basis_.conservativeResize(static_cast<Eigen::Index>(pivots_.size()), basis_.cols());
  }

  Eigen::Index dimension() const { return static_cast<Eigen::Index>(pivots_.size()); }
  const Matrix<Scalar>& basis() const { return basis_; }

  Vector<Scalar> reduce(Vector<Scalar> v) const {
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      const Scalar c = v(pivots_[r]);
      if (c != Scalar(0)) v -= c * basis_.row(static_cast<Eigen::Index>(r)).transpose();
    }
    return v;
  }

  bool contains(const Vector<Scalar>& v) const {
    const Vector<Scalar> r = reduce(v);
    for (Eigen::Index i = 0; i < r.size(); ++i)
      if (r(i) != Scalar(0)) return false;
    return true;
  }

 private:
  Matrix<Scalar> basis_;
  std::vector<Eigen::Index> pivots_;
};

}  // namespace otcohom
