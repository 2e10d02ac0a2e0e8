#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conerep/cone.hpp"
#include "conerep/oracle.hpp"
#include "test_util.hpp"

using namespace conerep;
using testutil::randomGenerators;
using testutil::randomNonzero;
using testutil::randomVector;
using testutil::vec;

namespace {

ConeV cone2(std::initializer_list<Vector> gens) {
  return ConeV(2, std::vector<Vector>(gens));
}

ConeV orthant2() { return cone2({vec({1, 0}), vec({0, 1})}); }

/// 360 rational directions around the circle plus the axes, via the
/// tangent-half-angle parametrization.
std::vector<Vector> directionSweep2d() {
  std::vector<Vector> dirs;
  for (int i = -89; i <= 89; ++i) {
    Rational t(i, 90);
    // (cos, sin) ~ (1 - t^2, 2t) up to positive scale; covers the right
    // half-plane, antipodes cover the left.
    Vector d = primitive(makeVector({1 - t * t, 2 * t}));
    dirs.push_back(d);
    dirs.push_back(Vector(-d));
  }
  dirs.push_back(vec({0, 1}));
  dirs.push_back(vec({0, -1}));
  return sortedUnique(dirs);
}

}  // namespace

TEST_CASE("member_v examples and dual routes agree") {
  CHECK(memberV(orthant2(), vec({2, 3})));
  CHECK(!memberV(orthant2(), vec({-1, 0})));
  CHECK(memberV(cone2({vec({2, 1}), vec({1, 2})}), vec({1, 1})));

  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 60; ++iter) {
    Index dim = 2 + static_cast<Index>(iter % 3);
    auto gens = randomGenerators(rng, dim, 3 + static_cast<size_t>(iter % 3),
                                 -3, 3);
    Vector x = randomVector(rng, dim, -4, 4);
    bool viaMult = memberViaMultipliers(gens, x);
    CHECK(viaMult == memberViaSeparation(gens, x));
    CHECK(viaMult == membershipOracle(gens, x));
  }
}

TEST_CASE("dual_cone examples") {
  CHECK(coneEquals(dualCone(orthant2()), orthant2()));

  ConeV whole = cone2({vec({1, 0}), vec({-1, 0}), vec({0, 1}), vec({0, -1})});
  CHECK(dualCone(whole).generators.empty());

  ConeV c = cone2({vec({2, 1}), vec({1, 2})});
  ConeV expected = cone2({vec({2, -1}), vec({-1, 2})});
  CHECK(coneEquals(dualCone(c), expected));
  CHECK(pairing(vec({2, 1}), vec({-1, 2})) == 0);
}

TEST_CASE("bipolar identity on fixed and random cones") {
  CHECK(bipolarCheck(orthant2()));
  CHECK(bipolarCheck(cone2({vec({1, 1})})));
  CHECK(bipolarCheck(ConeV(2, {})));  // C = {0}

  std::mt19937_64 rng(29);
  for (int iter = 0; iter < 50; ++iter) {
    Index dim = 2 + static_cast<Index>(iter % 4);
    ConeV c(dim, randomGenerators(rng, dim, 2 + static_cast<size_t>(iter % 4),
                                  -5, 5));
    CHECK(bipolarCheck(c));
  }
}

TEST_CASE("containment examples and duality antitonicity") {
  CHECK(contains(orthant2(), cone2({vec({1, 1})})));
  CHECK(!contains(cone2({vec({1, 1})}), orthant2()));
  CHECK(contains(cone2({vec({1, 0}), vec({1, 1})}), cone2({vec({2, 1})})));

  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 40; ++iter) {
    Index dim = 2 + static_cast<Index>(iter % 3);
    ConeV c(dim, randomGenerators(rng, dim, 2, -3, 3));
    ConeV d(dim, randomGenerators(rng, dim, 2, -3, 3));
    CHECK(contains(d, c) == contains(dualCone(c), dualCone(d)));
  }
}

TEST_CASE("membership duality against the dual generators") {
  std::mt19937_64 rng(37);
  for (int iter = 0; iter < 40; ++iter) {
    Index dim = 2 + static_cast<Index>(iter % 3);
    ConeV c(dim, randomGenerators(rng, dim, 2 + static_cast<size_t>(iter % 3),
                                  -3, 3));
    ConeV dual = dualCone(c);
    Vector x = randomVector(rng, dim, -4, 4);
    bool allNonneg = true;
    for (const auto& d : dual.generators)
      if (pairing(x, d) < 0) allNonneg = false;
    CHECK(memberV(c, x) == allNonneg);
  }
}

TEST_CASE("is_complete examples") {
  CHECK(isComplete(ConeH(2, {vec({1, 0})})));
  CHECK(!isComplete(ConeH(2, {vec({1, 0}), vec({0, 1})})));
  CHECK(isComplete(ConeH(2, {vec({1, 1})})));
  CHECK(isComplete(ConeH(3, {vec({1, 2, 3}), vec({2, 4, 6})})));
}

TEST_CASE("is_complete agrees with a grid sweep") {
  std::mt19937_64 rng(41);
  GridSpec grid;
  grid.dim = 2;
  grid.numeratorBound = 6;
  grid.denominators = {1, 2, 3};
  for (int iter = 0; iter < 30; ++iter) {
    std::vector<Vector> normals;
    size_t count = 1 + static_cast<size_t>(iter % 2);
    for (size_t i = 0; i < count; ++i)
      normals.push_back(randomNonzero(rng, 2, -3, 3));
    ConeH c(2, normals);
    bool covered = true;
    for (const auto& x : grid.points()) {
      bool inC = memberH(c, x);
      bool inNegC = memberH(c, Vector(-x));
      if (!inC && !inNegC) covered = false;
    }
    // The grid can only refute completeness, never certify it; but for
    // incomplete cones the uncovered region is open, so the dense grid
    // always finds a hole at these coefficient sizes.
    CHECK(isComplete(c) == covered);
  }
}

TEST_CASE("pairwise_G_intersections examples and completeness bridge") {
  CHECK(pairwiseGIntersections({vec({-1, 0}), vec({0, -1})}));
  CHECK(!pairwiseGIntersections({vec({1, 0}), vec({-1, 0})}));

  // Non-member sample of a complete cone: all G intersect pairwise.
  ConeH halfplane(2, {vec({1, 1})});
  std::vector<Vector> sample;
  for (const auto& x : directionSweep2d())
    if (!memberH(halfplane, x)) sample.push_back(x);
  REQUIRE(sample.size() > 10);
  CHECK(pairwiseGIntersections(sample));

  // Non-member sample of the (incomplete) orthant: fails.
  ConeH orthH(2, {vec({1, 0}), vec({0, 1})});
  std::vector<Vector> orthSample;
  for (const auto& x : directionSweep2d())
    if (!memberH(orthH, x)) orthSample.push_back(x);
  CHECK(!pairwiseGIntersections(orthSample));
}

TEST_CASE("lemma_witness three cases") {
  {
    Vector y = lemmaWitness(vec({1, 0}), vec({2, 0}), vec({-3, 0}));
    CHECK(pairing(vec({-3, 0}), y) < 0);
    CHECK(pairing(vec({1, 0}), y) >= 0);
    CHECK(pairing(vec({2, 0}), y) >= 0);
  }
  {
    Vector y = lemmaWitness(vec({1, 0}), vec({0, 1}), vec({-1, -1}));
    CHECK(pairing(vec({-1, -1}), y) < 0);
    CHECK(pairing(vec({1, 0}), y) >= 0);
    CHECK(pairing(vec({0, 1}), y) >= 0);
  }
  {
    Vector a = vec({1, 0, 0}), b = vec({0, 1, 0}), c = vec({0, 0, 1});
    Vector y = lemmaWitness(a, b, c);
    CHECK(pairing(c, y) < 0);
    CHECK(pairing(a, y) >= 0);
    CHECK(pairing(b, y) >= 0);
  }
  CHECK_THROWS_AS(lemmaWitness(vec({1, 0}), vec({0, 1}), vec({1, 1})),
                  DomainError);
}

TEST_CASE("lemma_witness postcondition on random triples") {
  std::mt19937_64 rng(43);
  int produced = 0;
  for (int iter = 0; iter < 400 && produced < 150; ++iter) {
    Index dim = 2 + static_cast<Index>(iter % 3);
    Vector a = randomNonzero(rng, dim, -3, 3);
    Vector b = randomNonzero(rng, dim, -3, 3);
    Vector c = randomNonzero(rng, dim, -3, 3);
    if (memberOfCone({a, b}, c)) continue;
    Vector y = lemmaWitness(a, b, c);
    CHECK(pairing(c, y) < 0);
    CHECK(pairing(a, y) >= 0);
    CHECK(pairing(b, y) >= 0);
    ++produced;
  }
  CHECK(produced >= 100);
}

TEST_CASE("no lemma witness exists inside the hull: grid refutation") {
  std::mt19937_64 rng(47);
  GridSpec grid;
  grid.numeratorBound = 4;
  grid.denominators = {1, 2};
  int checked = 0;
  for (int iter = 0; iter < 200 && checked < 40; ++iter) {
    Index dim = 2 + static_cast<Index>(iter % 2);
    grid.dim = dim;
    Vector a = randomNonzero(rng, dim, -2, 2);
    Vector b = randomNonzero(rng, dim, -2, 2);
    Vector c = randomNonzero(rng, dim, -2, 2);
    if (!memberOfCone({a, b}, c)) continue;
    for (const auto& y : grid.points()) {
      bool witness = pairing(c, y) < 0 && pairing(a, y) >= 0 &&
                     pairing(b, y) >= 0;
      CHECK(!witness);
      if (witness) break;
    }
    ++checked;
  }
  CHECK(checked >= 30);
}

TEST_CASE("interior_member examples") {
  CHECK(interiorMember(orthant2(), vec({1, 1})));
  CHECK(!interiorMember(orthant2(), vec({1, 0})));
  CHECK(interiorMember(cone2({vec({2, 1}), vec({1, 2})}), vec({1, 1})));
  CHECK_THROWS_AS(interiorMember(cone2({vec({1, 1})}), vec({1, 1})),
                  DomainError);
}

TEST_CASE("interior implies membership with boundary certificate") {
  std::mt19937_64 rng(53);
  for (int iter = 0; iter < 60; ++iter) {
    Index dim = 2 + static_cast<Index>(iter % 2);
    ConeV c(dim, randomGenerators(rng, dim, static_cast<size_t>(dim) + 1,
                                  -3, 3));
    if (rank(c.generators) != dim) continue;
    Vector x = randomVector(rng, dim, -4, 4);
    bool interior = interiorMember(c, x);
    bool member = memberV(c, x);
    if (interior) CHECK(member);
    if (member && !interior) {
      bool boundaryTouch = false;
      for (const auto& d : dualCone(c).generators)
        if (pairing(x, d) == 0) boundaryTouch = true;
      CHECK(boundaryTouch);
    }
  }
}

TEST_CASE("open cone membership and canonical cone") {
  OpenConeH u{2, {vec({1, 0}), vec({0, 1})}};
  CHECK(openConeMember(u, vec({1, 1})));
  CHECK(!openConeMember(u, vec({1, 0})));
  CHECK(openConeMember(OpenConeH{2, {vec({1, 1})}}, vec({1, 0})));

  CHECK(coneEquals(openConeCanonical(u), orthant2()));
  OpenConeH redundant{2, {vec({1, 0}), vec({0, 1}), vec({1, 1})}};
  CHECK(coneEquals(openConeCanonical(redundant), orthant2()));
  CHECK(coneEquals(openConeCanonical(OpenConeH{2, {vec({1, 1})}}),
                   cone2({vec({1, 1})})));
  CHECK_THROWS_AS(openConeCanonical(OpenConeH{2, {vec({1, 0}), vec({-1, 0})}}),
                  DomainError);
}

TEST_CASE("closed_cone_rep_2d on the spec-level fixed shapes") {
  auto sweep = directionSweep2d();

  auto checkAgreement = [&](const UnionConeV& c) {
    RepFamily f = closedConeRep2d(c);
    for (const auto& x : sweep) CHECK(familyMember(f, x) == memberUnion(c, x));
    for (const auto& part : c.parts)
      for (const auto& g : part.generators)
        CHECK(familyMember(f, g) == memberUnion(c, g));
  };

  UnionConeV twoRays{2, {cone2({vec({1, 0})}), cone2({vec({0, 1})})}};
  checkAgreement(twoRays);

  UnionConeV halfplane{2, {cone2({vec({1, 0}), vec({-1, 0}), vec({0, 1})})}};
  checkAgreement(halfplane);

  UnionConeV origin{2, {ConeV(2, {})}};
  RepFamily f0 = closedConeRep2d(origin);
  for (const auto& x : directionSweep2d()) CHECK(!familyMember(f0, x));
  CHECK(familyMember(f0, vec({0, 0})));

  UnionConeV plane{2, {cone2({vec({1, 0}), vec({-1, 0}), vec({0, 1}),
                              vec({0, -1})})}};
  RepFamily fp = closedConeRep2d(plane);
  CHECK(fp.wholeSpace);
}

TEST_CASE("closed_cone_rep_2d on random sector unions") {
  std::mt19937_64 rng(59);
  auto sweep = directionSweep2d();
  for (int iter = 0; iter < 25; ++iter) {
    UnionConeV c;
    c.dim = 2;
    size_t parts = 1 + static_cast<size_t>(iter % 3);
    for (size_t p = 0; p < parts; ++p)
      c.parts.push_back(
          ConeV(2, randomGenerators(rng, 2, 1 + (iter + p) % 2, -4, 4)));
    RepFamily f = closedConeRep2d(c);
    for (const auto& x : sweep) CHECK(familyMember(f, x) == memberUnion(c, x));
  }
}

TEST_CASE("justifiable_K examples") {
  auto sweep = directionSweep2d();

  UnionConeV halfplane{2, {cone2({vec({1, 0}), vec({0, 1}), vec({0, -1})})}};
  ConeV k = justifiableK(halfplane);
  CHECK(coneEquals(k, cone2({vec({1, 0})})));
  CHECK(pairing(vec({0, 5}), vec({1, 0})) >= 0);
  CHECK(pairing(vec({-1, 0}), vec({1, 0})) < 0);

  UnionConeV tilted{2, {cone2({vec({2, -1}), vec({-2, 1}), vec({0, 1})})}};
  CHECK(coneEquals(justifiableK(tilted), cone2({vec({1, 2})})));

  UnionConeV plane{2, {cone2({vec({1, 0}), vec({-1, 0}), vec({0, 1}),
                              vec({0, -1})})}};
  ConeV k0 = justifiableK(plane);
  CHECK(k0.generators.empty());

  // Representation identity over the sweep.
  for (const auto& x : sweep) {
    bool viaK = false;
    for (const auto& g : k.generators)
      if (pairing(x, g) >= 0) viaK = true;
    CHECK(viaK == memberUnion(halfplane, x));
  }
}

TEST_CASE("justifiable_K rejects incomplete or non-convex-difference input") {
  UnionConeV orthUnion{2, {orthant2()}};
  CHECK_THROWS_WITH_AS(justifiableK(orthUnion),
                       doctest::Contains("completeness"), DomainError);

  // Upper halfplane plus a lower sector: C u (-C) covers the plane, but
  // C \ (-C) splits into two disjoint open sectors, so convexity fails.
  UnionConeV mixed{2,
                   {cone2({vec({1, 0}), vec({-1, 0}), vec({0, 1})}),
                    cone2({vec({0, -1}), vec({1, -1})})}};
  CHECK_THROWS_WITH_AS(justifiableK(mixed), doctest::Contains("convex"),
                       DomainError);
}

TEST_CASE("justifiable_K on random complete halfspace-type cones") {
  std::mt19937_64 rng(61);
  auto sweep = directionSweep2d();
  for (int iter = 0; iter < 25; ++iter) {
    Vector n = randomNonzero(rng, 2, -4, 4);
    // C = closed halfplane { <x,n> >= 0 } as a V-rep union part.
    ConeV part(2, hrepToVrep(2, {n}));
    UnionConeV c{2, {part}};
    ConeV k = justifiableK(c);
    CHECK(!k.generators.empty());
    for (const auto& x : sweep) {
      bool viaK = false;
      for (const auto& g : k.generators)
        if (pairing(x, g) >= 0) viaK = true;
      CHECK(viaK == memberUnion(c, x));
    }
  }
}

TEST_CASE("evren_check examples and random triples") {
  CHECK(evrenCheck(cone2({vec({1, 0})}), orthant2(), orthant2()));
  ConeV a = cone2({vec({1, 2})});
  CHECK(evrenCheck(a, a, orthant2()));

  std::mt19937_64 rng(67);
  int run = 0;
  for (int iter = 0; iter < 300 && run < 50; ++iter) {
    Index dim = 2 + static_cast<Index>(iter % 3);
    ConeV c(dim, randomGenerators(rng, dim, 2 + static_cast<size_t>(iter % 3),
                                  -3, 3));
    ConeV aa(dim, randomGenerators(rng, dim, 2, -3, 3));
    ConeV bb(dim, randomGenerators(rng, dim, 2, -3, 3));
    bool inSpanOk = true;
    for (const auto& g : aa.generators)
      if (!inSpan(c.generators, g)) inSpanOk = false;
    for (const auto& g : bb.generators)
      if (!inSpan(c.generators, g)) inSpanOk = false;
    if (!inSpanOk) continue;
    CHECK(evrenCheck(aa, bb, c));
    ++run;
  }
  CHECK(run >= 30);
}

TEST_CASE("dual_inclusion_check examples and random instances") {
  RepFamily singles;
  singles.dim = 2;
  singles.sets = {{vec({1, 0})}, {vec({0, 1})}};
  CHECK(dualInclusionCheck(orthant2(), singles,
                           ConeH(2, {vec({1, 0}), vec({0, 1})})));

  RepFamily miss;
  miss.dim = 2;
  miss.sets = {{vec({-1, 0})}};
  CHECK(dualInclusionCheck(cone2({vec({1, 1})}), miss,
                           ConeH(2, {vec({-1, 0})})));

  std::mt19937_64 rng(71);
  for (int iter = 0; iter < 40; ++iter) {
    Index dim = 2 + static_cast<Index>(iter % 2);
    ConeV c(dim, randomGenerators(rng, dim, 2 + static_cast<size_t>(iter % 2),
                                  -3, 3));
    RepFamily f;
    f.dim = dim;
    for (const auto& d : dualCone(c).generators) f.sets.push_back({d});
    if (f.sets.empty()) f.wholeSpace = true;
    ConeH asH(dim, {});
    asH.dim = dim;
    for (const auto& d : dualCone(c).generators) asH.normals.push_back(d);
    ConeV h(dim, randomGenerators(rng, dim, 2, -3, 3));
    CHECK(dualInclusionCheck(h, f, asH));
  }
}

TEST_CASE("hrepToVrep round-trips against direct membership") {
  std::mt19937_64 rng(73);
  for (int iter = 0; iter < 30; ++iter) {
    Index dim = 2 + static_cast<Index>(iter % 3);
    std::vector<Vector> normals =
        randomGenerators(rng, dim, 1 + static_cast<size_t>(iter % 3), -3, 3);
    auto rays = hrepToVrep(dim, normals);
    // Every ray satisfies the H-rep.
    for (const auto& r : rays)
      for (const auto& n : normals) CHECK(pairing(r, n) >= 0);
    // Every H-rep point from a sample is a conic combination of the rays.
    for (int s = 0; s < 10; ++s) {
      Vector x = randomVector(rng, dim, -3, 3);
      bool inH = true;
      for (const auto& n : normals)
        if (pairing(x, n) < 0) inH = false;
      if (inH) CHECK(membershipOracle(rays, x));
    }
  }
}
