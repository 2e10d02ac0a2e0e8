#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "conerep/conic.hpp"
#include "conerep/rep_family.hpp"

namespace conerep {

/// Finitely generated closed convex pointed cone, V-representation.
/// Generators are stored primitive (coprime integer coordinates); only
/// positive scaling is normalized away, direction matters. An empty
/// generator list is the cone {0}.
struct ConeV {
  Index dim = 0;
  std::vector<Vector> generators;

  ConeV() = default;
  ConeV(Index d, std::vector<Vector> gens) : dim(d) {
    for (auto& g : gens) {
      require(g.size() == dim, "ConeV: generator dimension mismatch");
      Vector p = primitive(g);
      require(!isZero(p), "ConeV: zero generator");
      generators.push_back(std::move(p));
    }
    generators = sortedUnique(std::move(generators));
  }
};

/// Halfspace-intersection cone { x : <x,n> >= 0 for every normal n }.
/// An empty normal list is the whole space.
struct ConeH {
  Index dim = 0;
  std::vector<Vector> normals;

  ConeH() = default;
  ConeH(Index d, std::vector<Vector> ns) : dim(d) {
    for (auto& n : ns) {
      require(n.size() == dim, "ConeH: normal dimension mismatch");
      Vector p = primitive(n);
      require(!isZero(p), "ConeH: zero normal");
      normals.push_back(std::move(p));
    }
  }
};

/// Blunted open convex cone { x : <x,n> > 0 for every normal n }.
struct OpenConeH {
  Index dim = 0;
  std::vector<Vector> normals;
};

/// Finite union of V-cones: closed, pointed, not necessarily convex.
struct UnionConeV {
  Index dim = 0;
  std::vector<ConeV> parts;
};

inline bool memberV(const ConeV& cone, const Vector& x) {
  require(x.size() == cone.dim, "member_v: dimension mismatch");
  return memberOfCone(cone.generators, x);
}

inline bool memberH(const ConeH& cone, const Vector& x) {
  require(x.size() == cone.dim, "ConeH membership: dimension mismatch");
  for (const auto& n : cone.normals)
    if (pairing(x, n) < 0) return false;
  return true;
}

inline bool memberUnion(const UnionConeV& cone, const Vector& x) {
  for (const auto& part : cone.parts)
    if (memberV(part, x)) return true;
  return isZero(x);
}

/// Dual cone C' = { y : <g,y> >= 0 for every generator }, as a minimal
/// V-representation.
inline ConeV dualCone(const ConeV& cone) {
  ConeV out;
  out.dim = cone.dim;
  out.generators = dualGenerators(cone.dim, cone.generators);
  return out;
}

/// D subset of C, by conic membership of every generator of D.
inline bool contains(const ConeV& outer, const ConeV& inner) {
  require(outer.dim == inner.dim, "contains: dimension mismatch");
  for (const auto& g : inner.generators)
    if (!memberV(outer, g)) return false;
  return true;
}

inline bool coneEquals(const ConeV& a, const ConeV& b) {
  return contains(a, b) && contains(b, a);
}

/// Bipolar identity C'' = C, checked by mutual containment. Exposed as an
/// operation so arbitrary inputs can be exercised from the CLI.
inline bool bipolarCheck(const ConeV& cone) {
  return coneEquals(dualCone(dualCone(cone)), cone);
}

/// C u (-C) = X. A point misses both C and -C iff some normal is violated
/// negatively and some other positively, so completeness reduces to
/// pairwise infeasibility.
inline bool isComplete(const ConeH& cone) {
  LinIneqSystem sys;
  sys.dim = cone.dim;
  for (const auto& ni : cone.normals) {
    for (const auto& nj : cone.normals) {
      sys.rows.clear();
      sys.add(Vector(-ni), Rel::GT);
      sys.add(nj, Rel::GT);
      if (feasible(sys)) return false;
    }
  }
  return true;
}

/// G_{x1} and G_{x2} intersect for every pair of the supplied non-member
/// directions.
inline bool pairwiseGIntersections(const std::vector<Vector>& nonmembers) {
  for (size_t i = 0; i < nonmembers.size(); ++i) {
    for (size_t j = i; j < nonmembers.size(); ++j) {
      LinIneqSystem sys;
      sys.dim = nonmembers[i].size();
      sys.add(Vector(-nonmembers[i]), Rel::GT);
      sys.add(Vector(-nonmembers[j]), Rel::GT);
      if (!feasible(sys)) return false;
    }
  }
  return true;
}

namespace detail {

/// Coefficients (alpha, beta) with alpha*a + beta*b = c, when they exist.
inline std::optional<std::pair<Rational, Rational>> planeCoefficients(
    const Vector& a, const Vector& b, const Vector& c) {
  std::vector<std::pair<Vector, Rational>> targets;
  for (Index j = 0; j < a.size(); ++j)
    targets.emplace_back(makeVector({a[j], b[j]}), c[j]);
  auto sol = solvePrescribedValues(targets);
  if (!sol) return std::nullopt;
  return std::make_pair((*sol)[0], (*sol)[1]);
}

}  // namespace detail

/// Constructive witness for G_c \ (G_a u G_b) being nonempty when c lies
/// outside co(cone({a,b})): returns y with <c,y> < 0, <a,y> >= 0,
/// <b,y> >= 0, following the three-case span analysis.
inline Vector lemmaWitness(const Vector& a, const Vector& b, const Vector& c) {
  requireSameDim(a, b);
  requireSameDim(a, c);
  require(!isZero(a) && !isZero(b) && !isZero(c),
          "lemma_witness: vectors must be nonzero");
  require(!memberOfCone({a, b}, c),
          "lemma_witness: c lies in co(cone({a,b})), no witness exists");

  bool bInSpanA = inSpan({a}, b);
  bool cInSpanAB = inSpan({a, b}, c);

  if (bInSpanA && cInSpanAB && inSpan({a}, c)) {
    // Case (i): b, c collinear with a. Any y with <a,y> = 1 works.
    auto y = solvePrescribedValues({{a, 1}});
    return *y;
  }
  if (cInSpanAB && !bInSpanA) {
    // Case (ii): c = alpha*a + beta*b with min(alpha, beta) < 0.
    auto coeffs = detail::planeCoefficients(a, b, c);
    auto [alpha, beta] = *coeffs;
    Vector u = a, v = b;
    if (alpha >= 0) {
      std::swap(alpha, beta);
      std::swap(u, v);
    }
    if (beta <= 0) {
      auto y = solvePrescribedValues({{u, 1}, {v, 1}});
      return *y;
    }
    auto y = solvePrescribedValues({{u, 1}, {v, -alpha / (2 * beta)}});
    return *y;
  }
  // Case (iii): c outside span({a,b}).
  auto y = solvePrescribedValues({{a, 0}, {b, 0}, {c, -1}});
  return *y;
}

/// Interior membership for full-dimensional cones: x is interior iff it
/// pairs strictly positively with every generator of the dual cone.
inline bool interiorMember(const ConeV& cone, const Vector& x) {
  require(x.size() == cone.dim, "interior_member: dimension mismatch");
  require(rank(cone.generators) == cone.dim,
          "interior_member: cone is not full-dimensional (the nonempty "
          "interior hypothesis fails)");
  for (const auto& d : dualCone(cone).generators)
    if (pairing(x, d) <= 0) return false;
  return true;
}

inline bool openConeMember(const OpenConeH& cone, const Vector& x) {
  require(x.size() == cone.dim, "open_cone_member: dimension mismatch");
  for (const auto& n : cone.normals)
    if (pairing(x, n) <= 0) return false;
  return true;
}

/// Canonical closed convex cone attached to an open convex cone: the conic
/// hull of its normals. Two normal lists cutting out the same nonempty open
/// cone yield equal canonical cones.
inline ConeV openConeCanonical(const OpenConeH& cone) {
  require(!cone.normals.empty(), "open_cone_canonical: no normals");
  LinIneqSystem sys;
  sys.dim = cone.dim;
  for (const auto& n : cone.normals) sys.add(n, Rel::GT);
  require(feasible(sys).has_value(), "open_cone_canonical: open cone is empty");
  ConeV out;
  out.dim = cone.dim;
  out.generators = minimalGenerators(cone.normals);
  return out;
}

namespace detail {

inline Rational cross2(const Vector& a, const Vector& b) {
  return a[0] * b[1] - a[1] * b[0];
}

inline Vector perpCCW(const Vector& v) { return makeVector({-v[1], v[0]}); }
inline Vector perpCW(const Vector& v) { return makeVector({v[1], -v[0]}); }

/// Counterclockwise order of 2-D directions starting just after (1,0)
/// rotated to the positive half: upper half-plane first.
inline bool ccwLess(const Vector& a, const Vector& b) {
  auto half = [](const Vector& v) {
    return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1;
  };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return cross2(a, b) > 0;
}

/// Open sector strictly between directions a and b (counterclockwise,
/// width at most a half-turn), as an open cone.
inline OpenConeH sectorBetween(const Vector& a, const Vector& b) {
  OpenConeH s;
  s.dim = 2;
  Rational cr = cross2(a, b);
  if (cr > 0) {
    s.normals = {primitive(perpCCW(a)), primitive(perpCW(b))};
  } else {
    require(cr == 0, "sector wider than a half-turn");
    // Antipodal endpoints: the open half-plane counterclockwise of a.
    s.normals = {primitive(perpCCW(a))};
  }
  return s;
}

}  // namespace detail

/// 2-D constructive closed-cone representation: decomposes the complement
/// of C into open convex sectors U_j and returns the family { -U_j }.
/// Family membership then agrees with geometric membership in C for every
/// direction.
inline RepFamily closedConeRep2d(const UnionConeV& cone) {
  require(cone.dim == 2, "closed_cone_rep_2d: dimension must be 2");

  // Event directions: all boundary rays of the parts, plus the axes so
  // that consecutive events are at most a quarter-turn apart.
  std::vector<Vector> events;
  for (Index i = 0; i < 2; ++i) {
    events.push_back(unitVector(2, i));
    events.push_back(Vector(-unitVector(2, i)));
  }
  for (const auto& part : cone.parts)
    for (const auto& g : minimalGenerators(part.generators))
      events.push_back(g);
  std::sort(events.begin(), events.end(), detail::ccwLess);
  events.erase(std::unique(events.begin(), events.end(), vecEq), events.end());

  size_t m = events.size();
  // Element 2i = event i, element 2i+1 = open arc from event i to i+1.
  std::vector<bool> member(2 * m);
  for (size_t i = 0; i < m; ++i) {
    member[2 * i] = memberUnion(cone, events[i]);
    Vector mid = primitive(Vector(events[i] + events[(i + 1) % m]));
    member[2 * i + 1] = memberUnion(cone, mid);
  }

  bool anyMember = false, anyNonMember = false;
  for (bool b : member) (b ? anyMember : anyNonMember) = true;
  if (!anyNonMember) return RepFamily::wholeSpaceFamily(2);

  RepFamily family;
  family.dim = 2;
  auto pushSector = [&](const Vector& a, const Vector& b) {
    OpenConeH s = detail::sectorBetween(a, b);
    std::vector<Vector> negated;
    for (const auto& n : s.normals) negated.push_back(Vector(-n));
    family.sets.push_back(std::move(negated));
  };

  if (!anyMember) {
    // C = {0}: cover the punctured plane by four open half-planes.
    for (Index i = 0; i < 2; ++i) {
      family.sets.push_back({Vector(-unitVector(2, i))});
      family.sets.push_back({unitVector(2, i)});
    }
    return family;
  }

  // Maximal non-member runs around the circle. C is closed, so every run
  // is an open arc bounded by member events.
  size_t n = 2 * m;
  for (size_t start = 0; start < n; ++start) {
    size_t prev = (start + n - 1) % n;
    if (member[start] || !member[prev]) continue;  // not a run start
    require(start % 2 == 1, "closed_cone_rep_2d: complement is not open");
    std::vector<Vector> q;
    q.push_back(events[((start - 1) / 2) % m]);  // member boundary event
    size_t e = start;
    while (!member[e]) {
      if (e % 2 == 0) q.push_back(events[e / 2]);  // interior non-member
      e = (e + 1) % n;
    }
    require(e % 2 == 0, "closed_cone_rep_2d: run must end at an event");
    q.push_back(events[e / 2]);  // member boundary event
    size_t k = q.size() - 2;     // interior event count
    if (k == 0) {
      pushSector(q[0], q[1]);
    } else {
      for (size_t i = 0; i + 2 < q.size(); ++i) pushSector(q[i], q[i + 2]);
    }
  }
  return family;
}

namespace detail {

/// Calls fn once per choice vector picking one element from every list.
template <typename T, typename Fn>
bool forEachChoice(const std::vector<std::vector<T>>& lists, Fn&& fn) {
  std::vector<size_t> idx(lists.size(), 0);
  while (true) {
    std::vector<T> choice;
    choice.reserve(lists.size());
    for (size_t i = 0; i < lists.size(); ++i) choice.push_back(lists[i][idx[i]]);
    if (!fn(choice)) return false;
    size_t i = 0;
    for (; i < lists.size(); ++i) {
      if (++idx[i] < lists[i].size()) break;
      idx[i] = 0;
    }
    if (i == lists.size()) return true;
  }
}

}  // namespace detail

/// Single compact set K representing a complete closed cone with convex
/// strict part: x in C iff <x,k> >= 0 for some k in K. Preconditions
/// (completeness of C and convexity of D = C \ (-C)) are verified exactly;
/// violations name the failed hypothesis.
inline ConeV justifiableK(const UnionConeV& cone) {
  Index dim = cone.dim;
  auto zeroK = [&] {
    ConeV k;
    k.dim = dim;
    k.generators = {};  // K = {0}: <x,0> = 0 >= 0 accepts everything
    return k;
  };

  // H-representations of the parts via the bipolar identity.
  std::vector<std::vector<Vector>> partNormals;
  for (const auto& part : cone.parts) {
    auto ns = dualGenerators(dim, part.generators);
    if (ns.empty()) return zeroK();  // some part is the whole space
    partNormals.push_back(std::move(ns));
  }
  require(!partNormals.empty(), "justifiable_K: empty union");

  // Completeness: no x escapes both C and -C.
  bool complete = detail::forEachChoice(partNormals, [&](const std::vector<Vector>& violC) {
    return detail::forEachChoice(partNormals, [&](const std::vector<Vector>& violNegC) {
      LinIneqSystem sys;
      sys.dim = dim;
      for (const auto& n : violC) sys.add(Vector(-n), Rel::GT);
      for (const auto& n : violNegC) sys.add(n, Rel::GT);
      return !feasible(sys).has_value();
    });
  });
  require(complete, "justifiable_K: C u (-C) = X fails (completeness axiom)");

  // D = C \ (-C) = X \ (-C) as a union of open polyhedral regions.
  std::vector<std::vector<Vector>> regions;
  detail::forEachChoice(partNormals, [&](const std::vector<Vector>& choice) {
    LinIneqSystem sys;
    sys.dim = dim;
    for (const auto& n : choice) sys.add(n, Rel::GT);
    if (feasible(sys)) regions.push_back(choice);
    return true;
  });
  if (regions.empty()) return zeroK();  // D empty, so C = X

  std::vector<Vector> hullGens;
  for (const auto& r : regions)
    for (const auto& g : hrepToVrep(dim, r)) hullGens.push_back(g);
  hullGens = minimalGenerators(std::move(hullGens));
  std::vector<Vector> hullNormals = dualGenerators(dim, hullGens);

  // Convexity of D: D must coincide with the interior of its closed
  // conic hull, i.e. -C must equal the complement of that interior.
  bool convex = !hullNormals.empty();
  for (size_t j = 0; convex && j < partNormals.size(); ++j) {
    LinIneqSystem sys;
    sys.dim = dim;
    for (const auto& n : partNormals[j]) sys.add(Vector(-n), Rel::GE);
    for (const auto& hn : hullNormals) sys.add(hn, Rel::GT);
    if (feasible(sys)) convex = false;
  }
  if (convex) {
    for (const auto& hn : hullNormals) {
      bool covered = detail::forEachChoice(
          partNormals, [&](const std::vector<Vector>& choice) {
            LinIneqSystem sys;
            sys.dim = dim;
            sys.add(Vector(-hn), Rel::GE);
            for (const auto& n : choice) sys.add(n, Rel::GT);
            return !feasible(sys).has_value();
          });
      if (!covered) {
        convex = false;
        break;
      }
    }
  }
  require(convex, "justifiable_K: C \\ (-C) is not convex (convexity axiom)");

  ConeV k;
  k.dim = dim;
  k.generators = dualGenerators(dim, hullGens);
  return k;
}

/// Both sides of the sub-cone comparison relative to the span D of C:
/// A subset of B, versus B' n D subset of A' n D. The operation evaluates
/// the two sides independently and reports whether they agree.
inline bool evrenCheck(const ConeV& a, const ConeV& b, const ConeV& c) {
  require(a.dim == b.dim && b.dim == c.dim, "evren_check: dimension mismatch");
  Index dim = a.dim;
  for (const auto& g : a.generators)
    require(inSpan(c.generators, g),
            "evren_check: A is not contained in the span of C");
  for (const auto& g : b.generators)
    require(inSpan(c.generators, g),
            "evren_check: B is not contained in the span of C");

  bool side1 = contains(b, a);

  std::vector<Vector> perp = nullSpaceBasis(c.generators, dim);
  auto dualWithinSpan = [&](const ConeV& z) {
    std::vector<Vector> normals = z.generators;
    for (const auto& w : perp) {
      normals.push_back(w);
      normals.push_back(Vector(-w));
    }
    return hrepToVrep(dim, normals);
  };
  std::vector<Vector> dualA = dualWithinSpan(a);
  std::vector<Vector> dualB = dualWithinSpan(b);
  bool side2 = true;
  for (const auto& g : dualB)
    if (!memberOfCone(dualA, g)) {
      side2 = false;
      break;
    }
  return side1 == side2;
}

/// (iii) => (i) direction of the dual-inclusion theorem: if every set of
/// the family meets H, every generator of H' must belong to C.
inline bool dualInclusionCheck(const ConeV& h, const RepFamily& family,
                               const ConeH& coneAsH) {
  require(h.dim == family.dim && h.dim == coneAsH.dim,
          "dual_inclusion_check: dimension mismatch");
  bool antecedent = true;
  for (const auto& set : family.sets) {
    bool meets = false;
    for (const auto& k : set)
      if (memberV(h, k)) {
        meets = true;
        break;
      }
    if (!meets) {
      antecedent = false;
      break;
    }
  }
  if (!antecedent) return true;
  for (const auto& g : dualCone(h).generators)
    if (!memberH(coneAsH, g)) return false;
  return true;
}

}  // namespace conerep
