#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "conerep/types.hpp"

namespace conerep {

/// Row echelon form by exact Gaussian elimination, in place.
/// Returns the pivot columns; rank = number of pivots.
inline std::vector<Index> rowEchelon(Matrix& m) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index p = -1;
    for (Index r = row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    m.row(p).swap(m.row(row));
    Rational inv = m(row, col);
    for (Index c = col; c < m.cols(); ++c) m(row, c) /= inv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      Rational f = m(r, col);
      for (Index c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Exact rank over the rationals of a list of vectors (rows).
inline Index rank(const std::vector<Vector>& vectors) {
  if (vectors.empty()) return 0;
  Matrix m(static_cast<Index>(vectors.size()), vectors.front().size());
  for (Index r = 0; r < m.rows(); ++r) {
    require(vectors[static_cast<size_t>(r)].size() == m.cols(),
            "rank: dimension mismatch");
    m.row(r) = vectors[static_cast<size_t>(r)].transpose();
  }
  return static_cast<Index>(rowEchelon(m).size());
}

/// Solves <v_i, y> = c_i for y. Returns nullopt when the prescriptions are
/// linearly inconsistent. Any solution is a valid answer; free coordinates
/// are set to zero.
inline std::optional<Vector> solvePrescribedValues(
    const std::vector<std::pair<Vector, Rational>>& targets) {
  if (targets.empty()) return zeroVector(0);
  Index dim = targets.front().first.size();
  Matrix m(static_cast<Index>(targets.size()), dim + 1);
  for (Index r = 0; r < m.rows(); ++r) {
    const auto& [v, c] = targets[static_cast<size_t>(r)];
    require(v.size() == dim, "solve_prescribed_values: dimension mismatch");
    m.row(r).head(dim) = v.transpose();
    m(r, dim) = c;
  }
  auto pivots = rowEchelon(m);
  // A pivot in the augmented column means 0 = 1: inconsistent.
  if (!pivots.empty() && pivots.back() == dim) return std::nullopt;
  Vector y = zeroVector(dim);
  for (size_t i = 0; i < pivots.size(); ++i)
    y[pivots[i]] = m(static_cast<Index>(i), dim);
  return y;
}

/// Basis of {y : <v,y> = 0 for every v in vectors}.
inline std::vector<Vector> nullSpaceBasis(const std::vector<Vector>& vectors,
                                          Index dim) {
  Matrix m(static_cast<Index>(vectors.size()), dim);
  for (Index r = 0; r < m.rows(); ++r) {
    require(vectors[static_cast<size_t>(r)].size() == dim,
            "null space: dimension mismatch");
    m.row(r) = vectors[static_cast<size_t>(r)].transpose();
  }
  auto pivots = rowEchelon(m);
  std::vector<bool> isPivot(static_cast<size_t>(dim), false);
  for (Index p : pivots) isPivot[static_cast<size_t>(p)] = true;
  std::vector<Vector> basis;
  for (Index free = 0; free < dim; ++free) {
    if (isPivot[static_cast<size_t>(free)]) continue;
    Vector b = zeroVector(dim);
    b[free] = 1;
    for (size_t i = 0; i < pivots.size(); ++i)
      b[pivots[i]] = -m(static_cast<Index>(i), free);
    basis.push_back(primitive(b));
  }
  return basis;
}

/// True iff v lies in the linear span of the given vectors.
inline bool inSpan(const std::vector<Vector>& vectors, const Vector& v) {
  std::vector<Vector> extended = vectors;
  extended.push_back(v);
  return rank(extended) == rank(vectors);
}

}  // namespace conerep
