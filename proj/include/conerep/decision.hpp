#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "conerep/cone.hpp"
#include "conerep/conic.hpp"

namespace conerep {

/// Probability vector over a finite outcome set: nonnegative entries with
/// exact sum 1.
struct Lottery {
  Vector probs;

  Lottery() = default;
  explicit Lottery(Vector p) : probs(std::move(p)) {
    Rational sum = 0;
    for (Index i = 0; i < probs.size(); ++i) {
      require(probs[i] >= 0, "Lottery: negative probability");
      sum += probs[i];
    }
    require(sum == 1, "Lottery: probabilities must sum to 1");
  }

  Index outcomes() const { return probs.size(); }
};

/// Anscombe-Aumann act: one lottery per state.
struct Act {
  std::vector<Lottery> rows;

  Act() = default;
  explicit Act(std::vector<Lottery> r) : rows(std::move(r)) {
    require(!rows.empty(), "Act: no states");
    for (const auto& l : rows)
      require(l.outcomes() == rows.front().outcomes(),
              "Act: inconsistent outcome counts");
  }

  Index states() const { return static_cast<Index>(rows.size()); }
  Index outcomes() const { return rows.front().outcomes(); }

  /// Flattened probability vector, row-major by state.
  Vector flatten() const {
    Vector v(states() * outcomes());
    for (Index w = 0; w < states(); ++w)
      v.segment(w * outcomes(), outcomes()) =
          rows[static_cast<size_t>(w)].probs;
    return v;
  }
};

/// Flattened difference vector of two acts: its pairing with a flattened
/// utility matrix equals the state-wise expected-utility difference sum.
inline Vector aaVectorize(const Act& f, const Act& g) {
  require(f.states() == g.states() && f.outcomes() == g.outcomes(),
          "aa_vectorize: shape mismatch");
  return Vector(f.flatten() - g.flatten());
}

/// Finite preference data over lotteries (omega = 1) or acts (omega > 1):
/// asserted pairs (a,b) in R, plus optional denied pairs (a,b) not in R.
/// Objects are stored flattened.
struct PreferenceData {
  bool acts = false;
  Index omega = 1;
  Index m = 0;
  std::vector<std::pair<Vector, Vector>> asserted;
  std::vector<std::pair<Vector, Vector>> denied;

  Index dim() const { return omega * m; }
};

/// Axiom flags; reflexivity and independence are standing hypotheses.
struct AxiomSet {
  bool transitivity = false;
  bool continuity = false;  // recorded; adds nothing for polyhedral data
};

enum class Verdict { Yes, No, Undetermined };

struct InconsistencyError : DomainError {
  using DomainError::DomainError;
};

/// Primitive ray directions of the Aumann cone {alpha (a-b)}: reflexive
/// pairs drop out, duplicates merge.
inline std::vector<Vector> aumannCone(const PreferenceData& data) {
  std::vector<Vector> rays;
  for (const auto& [a, b] : data.asserted) {
    Vector d = primitive(Vector(a - b));
    if (!isZero(d)) rays.push_back(std::move(d));
  }
  return sortedUnique(std::move(rays));
}

namespace detail {

/// Membership of d in the implied cone under the axiom set: the ray union
/// without transitivity, its convex conic hull with it.
inline bool impliedMember(const std::vector<Vector>& rays,
                          const std::vector<Vector>& hullRays,
                          const AxiomSet& axioms, const Vector& d) {
  if (isZero(d)) return true;  // reflexivity
  if (axioms.transitivity) return memberOfCone(hullRays, d);
  Vector p = primitive(d);
  for (const auto& r : rays)
    if (vecEq(p, r)) return true;
  return false;
}

inline void checkConsistency(const PreferenceData& data,
                             const std::vector<Vector>& rays,
                             const std::vector<Vector>& hullRays,
                             const AxiomSet& axioms) {
  for (const auto& [a, b] : data.denied) {
    Vector d(a - b);
    if (impliedMember(rays, hullRays, axioms, d)) {
      throw InconsistencyError(
          axioms.transitivity
              ? "inconsistent preference data: a denied pair is implied "
                "under {reflexivity, independence, transitivity}"
              : "inconsistent preference data: a denied pair is implied "
                "under {reflexivity, independence}");
    }
  }
}

inline std::vector<Vector> minimalRays(const PreferenceData& data) {
  return minimalGeneratorsLarge(data.dim(), aumannCone(data));
}

}  // namespace detail

/// Axiom-conditional implied-preference query for the pair (p, q), given as
/// flattened probability vectors.
inline Verdict implied(const PreferenceData& data, const AxiomSet& axioms,
                       const Vector& p, const Vector& q) {
  require(p.size() == data.dim() && q.size() == data.dim(),
          "implied: dimension mismatch");
  std::vector<Vector> rays = aumannCone(data);
  std::vector<Vector> hullRays =
      axioms.transitivity ? detail::minimalRays(data) : rays;
  detail::checkConsistency(data, rays, hullRays, axioms);

  Vector d(p - q);
  if (detail::impliedMember(rays, hullRays, axioms, d)) return Verdict::Yes;

  // Forced exclusion: admitting (p,q) would imply a denied pair.
  for (const auto& [a, b] : data.denied) {
    Vector dd(a - b);
    bool forced;
    if (axioms.transitivity) {
      std::vector<Vector> augmented = hullRays;
      augmented.push_back(primitive(d));
      forced = memberOfCone(augmented, dd);
    } else {
      forced = vecEq(primitive(dd), primitive(d));
    }
    if (forced) return Verdict::No;
  }
  return Verdict::Undetermined;
}

/// Multi-utility set U: generators of the dual cone of the conic hull of
/// the asserted differences. Representatives are quotiented by the
/// per-state constant ambiguity: minimum coordinate 0 in every state block.
inline std::vector<Vector> multiUtility(const PreferenceData& data,
                                        const AxiomSet& axioms) {
  require(axioms.transitivity, "multi_utility: transitivity axiom required");
  std::vector<Vector> hullRays = detail::minimalRays(data);
  detail::checkConsistency(data, aumannCone(data), hullRays, axioms);

  std::vector<Vector> duals = dualGenerators(data.dim(), hullRays);
  std::vector<Vector> out;
  for (const auto& u : duals) {
    Vector v = u;
    for (Index w = 0; w < data.omega; ++w) {
      Rational mn = v[w * data.m];
      for (Index i = 1; i < data.m; ++i)
        if (v[w * data.m + i] < mn) mn = v[w * data.m + i];
      for (Index i = 0; i < data.m; ++i) v[w * data.m + i] -= mn;
    }
    if (!isZero(v)) out.push_back(std::move(v));
  }
  out = sortedUnique(std::move(out));
  if (out.empty()) out.push_back(zeroVector(data.dim()));
  return out;
}

/// Convexity certificate for the ray-union Aumann cone. A union of rays is
/// convex exactly when all rays are pairwise collinear; otherwise two
/// non-collinear rays, a conic combination outside the union, and one
/// separating functional per asserted ray are produced.
struct TransitivityCertificate {
  bool convex = false;
  Vector ray1, ray2, combination;
  // Per asserted ray r: a functional y with <combination,y> < 0 <= <r,y>.
  std::vector<std::pair<Vector, Vector>> separators;
};

inline TransitivityCertificate transitivityCertificate(
    const PreferenceData& data) {
  require(!data.acts, "transitivity_certificate: lottery ground required");
  TransitivityCertificate cert;
  std::vector<Vector> rays = aumannCone(data);

  bool convex = true;
  for (size_t i = 0; convex && i < rays.size(); ++i)
    for (size_t j = i + 1; j < rays.size(); ++j)
      if (!vecEq(rays[i], Vector(-rays[j]))) {
        convex = false;
        cert.ray1 = rays[i];
        cert.ray2 = rays[j];
        break;
      }
  cert.convex = convex;
  if (convex) return cert;

  // A conic combination of the two rays avoiding every asserted direction.
  for (int t = 1;; ++t) {
    Vector c = primitive(Vector(cert.ray1 + Rational(t) * cert.ray2));
    bool onRay = false;
    for (const auto& r : rays)
      if (vecEq(c, r)) {
        onRay = true;
        break;
      }
    if (!onRay) {
      cert.combination = c;
      break;
    }
  }
  for (const auto& r : rays)
    cert.separators.emplace_back(r, lemmaWitness(r, r, cert.combination));
  return cert;
}

}  // namespace conerep
