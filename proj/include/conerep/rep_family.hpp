#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "conerep/conic.hpp"
#include "conerep/feasibility.hpp"
#include "conerep/types.hpp"

namespace conerep {

/// Finite family of finite dual-vector sets. A vector x belongs to the
/// represented cone iff every inner set contains some y with <x,y> >= 0.
/// The whole space carries a dedicated flag: the literal empty inner set
/// would make the membership predicate vacuously false, so the convention
/// "X is represented by {emptyset}" is encoded explicitly.
struct RepFamily {
  Index dim = 0;
  std::vector<std::vector<Vector>> sets;
  bool wholeSpace = false;

  static RepFamily wholeSpaceFamily(Index dim) {
    RepFamily f;
    f.dim = dim;
    f.wholeSpace = true;
    return f;
  }
};

/// Membership predicate of the represented cone.
inline bool familyMember(const RepFamily& family, const Vector& x) {
  require(x.size() == family.dim, "family_member: dimension mismatch");
  if (family.wholeSpace) return true;
  for (const auto& set : family.sets) {
    bool hit = false;
    for (const auto& y : set) {
      if (pairing(x, y) >= 0) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

/// Triviality of a dual set K: no x pairs negatively with all of K. When K
/// is not trivial the witness x (with <x,y> < 0 for every y in K) is
/// returned.
struct TrivialityResult {
  bool trivial = false;
  std::optional<Vector> witness;
};

inline TrivialityResult isTrivial(const std::vector<Vector>& set) {
  require(!set.empty(), "is_trivial: empty set");
  LinIneqSystem sys;
  sys.dim = set.front().size();
  for (const auto& y : set) sys.add(Vector(-y), Rel::GT);
  auto w = feasible(sys);
  if (w) return {false, *w};
  return {true, std::nullopt};
}

/// K subset of G_x, i.e. <x,y> < 0 for every y in K.
inline bool subsetOfGx(const std::vector<Vector>& set, const Vector& x) {
  for (const auto& y : set) {
    if (pairing(x, y) >= 0) return false;
  }
  return !set.empty();
}

/// Pointwise test of hat-operator equality over a direction sample: the two
/// families contain a subset of G_x for exactly the same sampled x. On
/// failure the offending direction is returned.
inline std::optional<Vector> hatEqualOnSample(
    const RepFamily& f1, const RepFamily& f2,
    const std::vector<Vector>& sample) {
  auto hatHas = [](const RepFamily& f, const Vector& x) {
    if (f.wholeSpace) return false;  // hat of {emptyset} contains no G_x
    for (const auto& set : f.sets)
      if (subsetOfGx(set, x)) return true;
    return false;
  };
  for (const auto& x : sample) {
    require(x.size() == f1.dim && x.size() == f2.dim,
            "hat_equal_on_sample: dimension mismatch");
    require(!isZero(x), "hat_equal_on_sample: zero sample vector");
    if (hatHas(f1, x) != hatHas(f2, x)) return x;
  }
  return std::nullopt;
}

/// Drops trivial inner sets and replaces each survivor by a minimal
/// generator list of its conic hull. Pointwise membership is unchanged.
/// A family whose sets are all trivial represents X and normalizes to the
/// whole-space convention.
inline RepFamily normalizeFamily(const RepFamily& family) {
  if (family.wholeSpace) return family;
  RepFamily out;
  out.dim = family.dim;
  for (const auto& set : family.sets) {
    if (isTrivial(set).trivial) continue;
    out.sets.push_back(minimalGenerators(set));
  }
  if (out.sets.empty()) out.wholeSpace = true;
  return out;
}

/// Desk-scale instance of the K(C) representation predicate: with G_x0 for
/// each supplied non-member x0 standing in for the infinite family, x is
/// accepted iff every { <x0,y> < 0, <x,y> >= 0 } system is satisfiable.
/// The oracle certifies that each listed vector really lies outside C.
inline bool kcMembershipTest(const std::function<bool(const Vector&)>& memberOracle,
                             const Vector& x,
                             const std::vector<Vector>& nonmembers) {
  for (const auto& x0 : nonmembers) {
    require(!memberOracle(x0),
            "kc_membership_test: listed vector is a member of C");
    LinIneqSystem sys;
    sys.dim = x.size();
    sys.add(Vector(-x0), Rel::GT);
    sys.add(x, Rel::GE);
    if (!feasible(sys)) return false;
  }
  return true;
}

}  // namespace conerep
