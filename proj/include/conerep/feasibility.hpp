#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "conerep/linalg.hpp"
#include "conerep/types.hpp"

namespace conerep {

/// Relation of <normal, y> against zero.
enum class Rel { GE, GT, EQ };

struct IneqRow {
  Vector normal;
  Rel rel = Rel::GE;
};

/// Homogeneous system of linear relations <n_i, y> {>=,>,=} 0 in the
/// unknown y. Every set in the cone calculus is a cone, so homogeneous
/// systems are lossless here.
struct LinIneqSystem {
  Index dim = 0;
  std::vector<IneqRow> rows;

  void add(const Vector& normal, Rel rel) {
    require(normal.size() == dim, "LinIneqSystem: dimension mismatch");
    rows.push_back({normal, rel});
  }
};

namespace detail {

/// Pairwise-domination pruning: identical primitive normals collapse to the
/// strictest relation. Full redundancy removal is out of scope.
inline void dedupeRows(std::vector<IneqRow>& rows) {
  for (auto& r : rows) r.normal = primitive(r.normal);
  std::sort(rows.begin(), rows.end(), [](const IneqRow& a, const IneqRow& b) {
    return lexLess(a.normal, b.normal);
  });
  std::vector<IneqRow> out;
  for (auto& r : rows) {
    if (!out.empty() && vecEq(out.back().normal, r.normal)) {
      Rel& prev = out.back().rel;
      if (prev == r.rel) continue;
      if (prev == Rel::EQ || r.rel == Rel::EQ) {
        // EQ absorbs GE; EQ next to GT is a genuine conflict, keep both.
        if (prev == Rel::GE || r.rel == Rel::GE)
          prev = Rel::EQ;
        else
          out.push_back(std::move(r));
      } else {
        prev = Rel::GT;
      }
    } else {
      out.push_back(std::move(r));
    }
  }
  rows = std::move(out);
}

/// Fourier-Motzkin elimination carrying strictness flags. Variables
/// [0, nvars) are live; all rows are zero beyond nvars. Returns a witness
/// (full length) or nullopt.
inline std::optional<Vector> fourierMotzkin(std::vector<IneqRow> rows,
                                            Index dim, Index nvars) {
  // Constant rows are decided directly.
  std::vector<IneqRow> live;
  for (auto& r : rows) {
    bool allZero = true;
    for (Index i = 0; i < nvars; ++i)
      if (r.normal[i] != 0) {
        allZero = false;
        break;
      }
    if (allZero) {
      if (r.rel == Rel::GT) return std::nullopt;  // 0 > 0
    } else {
      live.push_back(std::move(r));
    }
  }
  rows = std::move(live);
  if (nvars == 0 || rows.empty()) return zeroVector(dim);
  Index k = nvars - 1;

  // Equality rows pivot out the variable exactly.
  for (size_t e = 0; e < rows.size(); ++e) {
    if (rows[e].rel != Rel::EQ || rows[e].normal[k] == 0) continue;
    IneqRow pivot = rows[e];
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(e));
    for (auto& r : rows) {
      if (r.normal[k] == 0) continue;
      r.normal -= (r.normal[k] / pivot.normal[k]) * pivot.normal;
    }
    auto w = fourierMotzkin(std::move(rows), dim, k);
    if (!w) return std::nullopt;
    Rational rest = 0;
    for (Index i = 0; i < dim; ++i)
      if (i != k) rest += pivot.normal[i] * (*w)[i];
    (*w)[k] = -rest / pivot.normal[k];
    return w;
  }

  std::vector<IneqRow> pos, neg, zero;
  for (auto& r : rows) {
    if (r.normal[k] > 0)
      pos.push_back(std::move(r));
    else if (r.normal[k] < 0)
      neg.push_back(std::move(r));
    else
      zero.push_back(std::move(r));
  }

  std::vector<IneqRow> next = zero;
  if (!pos.empty() && !neg.empty()) {
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        IneqRow comb;
        comb.normal = (-q.normal[k]) * p.normal + p.normal[k] * q.normal;
        comb.rel =
            (p.rel == Rel::GT || q.rel == Rel::GT) ? Rel::GT : Rel::GE;
        next.push_back(std::move(comb));
      }
    }
  }
  dedupeRows(next);
  auto w = fourierMotzkin(std::move(next), dim, k);
  if (!w) return std::nullopt;

  // Back-substitute y_k between the surviving bounds.
  auto bound = [&](const IneqRow& r) -> Rational {
    Rational rest = 0;
    for (Index i = 0; i < k; ++i) rest += r.normal[i] * (*w)[i];
    return -rest / r.normal[k];
  };
  bool hasLo = false, hasHi = false;
  Rational lo = 0, hi = 0;
  for (const auto& p : pos) {
    Rational b = bound(p);
    if (!hasLo || b > lo) lo = b;
    hasLo = true;
  }
  for (const auto& q : neg) {
    Rational b = bound(q);
    if (!hasHi || b < hi) hi = b;
    hasHi = true;
  }
  if (hasLo && hasHi)
    (*w)[k] = (lo < hi) ? (lo + hi) / 2 : lo;
  else if (hasLo)
    (*w)[k] = lo + 1;
  else if (hasHi)
    (*w)[k] = hi - 1;
  return w;
}

}  // namespace detail

/// Decides satisfiability of the system exactly; on success the returned
/// witness satisfies every row (GT rows strictly). Infeasibility over the
/// rationals coincides with infeasibility over the reals by homogeneity
/// and density.
inline std::optional<Vector> feasible(const LinIneqSystem& sys) {
  std::vector<IneqRow> rows = sys.rows;
  for (const auto& r : rows)
    require(r.normal.size() == sys.dim, "feasible: dimension mismatch");
  detail::dedupeRows(rows);
  return detail::fourierMotzkin(std::move(rows), sys.dim, sys.dim);
}

/// Re-checks a witness against every row by direct substitution.
inline bool satisfies(const LinIneqSystem& sys, const Vector& y) {
  for (const auto& r : sys.rows) {
    Rational v = pairing(r.normal, y);
    switch (r.rel) {
      case Rel::GE:
        if (v < 0) return false;
        break;
      case Rel::GT:
        if (v <= 0) return false;
        break;
      case Rel::EQ:
        if (v != 0) return false;
        break;
    }
  }
  return true;
}

/// Strong separation of x0 from the finitely generated cone with the given
/// generators: finds y with <g,y> >= 0 for every generator and <x0,y> = -1.
/// Returns nullopt exactly when x0 lies in the cone (no separator exists).
inline std::optional<Vector> strongSeparate(const std::vector<Vector>& generators,
                                            const Vector& x0) {
  LinIneqSystem sys;
  sys.dim = x0.size();
  for (const auto& g : generators) sys.add(g, Rel::GE);
  sys.add(Vector(-x0), Rel::GT);
  auto y = feasible(sys);
  if (!y) return std::nullopt;
  Rational v = pairing(x0, *y);
  return Vector(*y / -v);
}

}  // namespace conerep
