#pragma once

#include <optional>
#include <vector>

#include "conerep/feasibility.hpp"
#include "conerep/linalg.hpp"
#include "conerep/types.hpp"

namespace conerep {

/// Conic membership through explicit multipliers: x in cone(G) iff the
/// homogenized system { lambda_i >= 0, t > 0, sum lambda_i g_i = t x } is
/// satisfiable.
inline bool memberViaMultipliers(const std::vector<Vector>& generators,
                                 const Vector& x) {
  Index k = static_cast<Index>(generators.size());
  Index dim = x.size();
  LinIneqSystem sys;
  sys.dim = k + 1;
  for (Index i = 0; i <= k; ++i)
    sys.add(unitVector(k + 1, i), i == k ? Rel::GT : Rel::GE);
  for (Index j = 0; j < dim; ++j) {
    Vector row = zeroVector(k + 1);
    for (Index i = 0; i < k; ++i)
      row[i] = generators[static_cast<size_t>(i)][j];
    row[k] = -x[j];
    sys.add(row, Rel::EQ);
  }
  return feasible(sys).has_value();
}

/// Conic membership through separation: x in cone(G) iff no y satisfies
/// <g,y> >= 0 for all g and <x,y> < 0. Finitely generated cones are
/// closed, so the two routes agree.
inline bool memberViaSeparation(const std::vector<Vector>& generators,
                                const Vector& x) {
  return !strongSeparate(generators, x).has_value();
}

/// x in cone(G)? Multiplier route for small generator lists (few
/// elimination variables), separation route otherwise.
inline bool memberOfCone(const std::vector<Vector>& generators,
                         const Vector& x) {
  for (const auto& g : generators) requireSameDim(g, x);
  if (generators.size() <= 12) return memberViaMultipliers(generators, x);
  return memberViaSeparation(generators, x);
}

/// Minimal generating sublist of cone(G): drops every generator that is a
/// conic combination of the others. Output is primitive, sorted, unique.
inline std::vector<Vector> minimalGenerators(std::vector<Vector> gens) {
  std::vector<Vector> cleaned;
  for (auto& g : gens) {
    Vector p = primitive(g);
    if (!isZero(p)) cleaned.push_back(std::move(p));
  }
  cleaned = sortedUnique(std::move(cleaned));
  for (size_t i = cleaned.size(); i-- > 0;) {
    std::vector<Vector> others;
    others.reserve(cleaned.size() - 1);
    for (size_t j = 0; j < cleaned.size(); ++j)
      if (j != i) others.push_back(cleaned[j]);
    if (memberOfCone(others, cleaned[i])) cleaned = std::move(others);
  }
  return sortedUnique(std::move(cleaned));
}

inline std::vector<Vector> hrepToVrep(Index dim,
                                      const std::vector<Vector>& normals);

/// minimalGenerators for possibly large generator lists: beyond the greedy
/// range, passing through the double dual keeps intermediate sets small.
inline std::vector<Vector> minimalGeneratorsLarge(Index dim,
                                                  std::vector<Vector> gens) {
  std::vector<Vector> cleaned;
  for (auto& g : gens) {
    Vector p = primitive(g);
    if (!isZero(p)) cleaned.push_back(std::move(p));
  }
  cleaned = sortedUnique(std::move(cleaned));
  if (cleaned.size() <= 20) return minimalGenerators(std::move(cleaned));
  return hrepToVrep(dim, hrepToVrep(dim, cleaned));
}

/// H-to-V conversion by the double description method: returns generators
/// of { x : <x,n> >= 0 for every n in normals }. Constraints are inserted
/// in input order; rays are re-minimized after each insertion.
inline std::vector<Vector> hrepToVrep(Index dim,
                                      const std::vector<Vector>& normals) {
  std::vector<Vector> rays;
  for (Index i = 0; i < dim; ++i) {
    rays.push_back(unitVector(dim, i));
    rays.push_back(Vector(-unitVector(dim, i)));
  }
  for (const auto& n : normals) {
    require(n.size() == dim, "hrepToVrep: dimension mismatch");
    std::vector<Vector> pos, neg, next;
    for (const auto& r : rays) {
      Rational v = pairing(r, n);
      if (v > 0)
        pos.push_back(r);
      else if (v < 0)
        neg.push_back(r);
      else
        next.push_back(r);
    }
    for (const auto& p : pos) {
      next.push_back(p);
      for (const auto& q : neg) {
        Vector w = pairing(p, n) * q - pairing(q, n) * p;
        if (!isZero(w)) next.push_back(primitive(w));
      }
    }
    rays = minimalGenerators(std::move(next));
  }
  return rays;
}

/// Generators of the dual cone { y : <g,y> >= 0 for every generator g }.
inline std::vector<Vector> dualGenerators(Index dim,
                                          const std::vector<Vector>& gens) {
  return hrepToVrep(dim, gens);
}

}  // namespace conerep
