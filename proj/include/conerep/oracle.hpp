#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "conerep/feasibility.hpp"
#include "conerep/linalg.hpp"
#include "conerep/types.hpp"

namespace conerep {

/// Rational evaluation grid: all vectors with coordinates p/q, |p| bounded,
/// q drawn from a fixed denominator list.
struct GridSpec {
  Index dim = 2;
  int numeratorBound = 4;
  std::vector<int> denominators = {1, 2, 3};

  std::vector<Rational> values() const {
    std::vector<Rational> vals;
    for (int q : denominators)
      for (int p = -numeratorBound; p <= numeratorBound; ++p)
        vals.push_back(Rational(p, q));
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
  }

  std::vector<Vector> points() const {
    std::vector<Rational> vals = values();
    std::vector<Vector> pts;
    Vector cur = zeroVector(dim);
    std::vector<size_t> idx(static_cast<size_t>(dim), 0);
    while (true) {
      for (Index i = 0; i < dim; ++i) cur[i] = vals[idx[static_cast<size_t>(i)]];
      pts.push_back(cur);
      Index i = 0;
      for (; i < dim; ++i) {
        auto& k = idx[static_cast<size_t>(i)];
        if (++k < vals.size()) break;
        k = 0;
      }
      if (i == dim) break;
    }
    return pts;
  }
};

/// Solves x = sum lambda_i s_i over the subset with lambda >= 0, by exact
/// elimination. Independent of the Fourier-Motzkin path.
inline bool nonnegCombination(const std::vector<Vector>& subset,
                              const Vector& x) {
  Index dim = x.size();
  Index k = static_cast<Index>(subset.size());
  Matrix m(dim, k + 1);
  for (Index j = 0; j < k; ++j) m.col(j) = subset[static_cast<size_t>(j)];
  m.col(k) = x;
  auto pivots = rowEchelon(m);
  if (!pivots.empty() && pivots.back() == k) return false;  // inconsistent
  Vector lambda = zeroVector(k);
  for (size_t i = 0; i < pivots.size(); ++i)
    lambda[pivots[i]] = m(static_cast<Index>(i), k);
  for (Index j = 0; j < k; ++j)
    if (lambda[j] < 0) return false;
  Vector check = zeroVector(dim);
  for (Index j = 0; j < k; ++j)
    check += lambda[j] * subset[static_cast<size_t>(j)];
  return vecEq(check, x);
}

/// Caratheodory-style brute-force conic membership: x lies in cone(G) iff
/// some subset of at most dim generators combines to x with nonnegative
/// multipliers. This is the independent oracle for every membership check.
inline bool membershipOracle(const std::vector<Vector>& generators,
                             const Vector& x) {
  if (isZero(x)) return true;
  Index dim = x.size();
  size_t k = generators.size();
  size_t limit = std::min<size_t>(k, static_cast<size_t>(dim));
  std::vector<size_t> pick;
  // Enumerate subsets of size 1..limit.
  std::function<bool(size_t)> rec = [&](size_t start) -> bool {
    if (!pick.empty()) {
      std::vector<Vector> subset;
      for (size_t i : pick) subset.push_back(generators[i]);
      if (nonnegCombination(subset, x)) return true;
    }
    if (pick.size() == limit) return false;
    for (size_t i = start; i < k; ++i) {
      pick.push_back(i);
      if (rec(i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(0);
}

/// Grid search for a witness of the system; refutation-direction oracle
/// for the feasibility procedure.
inline std::optional<Vector> gridWitness(const LinIneqSystem& sys,
                                         const GridSpec& grid) {
  for (const auto& y : grid.points())
    if (satisfies(sys, y)) return y;
  return std::nullopt;
}

}  // namespace conerep
