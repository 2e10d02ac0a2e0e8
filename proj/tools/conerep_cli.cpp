// Command-line front end for the exact cone-representation library.
//
// Every subcommand parses plain-text instance files, runs the exact
// procedure, and prints deterministic rational output (sets in
// lexicographic order of primitive vectors). Exit status: 0 success,
// 1 domain error (failed hypothesis, named), 2 parse error.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "conerep/cone.hpp"
#include "conerep/decision.hpp"
#include "conerep/io.hpp"
#include "conerep/oracle.hpp"
#include "conerep/rep_family.hpp"

namespace {

using namespace conerep;

struct GridFlags {
  int nbound = 4;
  std::string dens = "1,2,3";

  GridSpec grid(Index dim) const {
    GridSpec g;
    g.dim = dim;
    g.numeratorBound = nbound;
    g.denominators.clear();
    std::string tok;
    std::istringstream is(dens);
    while (std::getline(is, tok, ',')) {
      int d = std::stoi(tok);
      if (d <= 0) throw ParseError("--dens: denominators must be positive");
      g.denominators.push_back(d);
    }
    if (g.denominators.empty()) throw ParseError("--dens: empty list");
    return g;
  }
};

/// Vector argument: inline "(1, 0, -3/7)" if it starts with '(', else a
/// path to a one-line vector file.
Vector vectorArg(const std::string& arg) {
  std::string trimmed = arg;
  size_t a = trimmed.find_first_not_of(" \t");
  if (a != std::string::npos && trimmed[a] == '(')
    return parseInlineVector(trimmed);
  return parseVectorFile(arg);
}

ConeV coneVArg(const std::string& path) {
  ParsedCone c = parseConeFile(path);
  if (c.kind == ParsedCone::Kind::V) return c.v;
  if (c.kind == ParsedCone::Kind::H) return ConeV(c.dim, hrepToVrep(c.dim, c.h.normals));
  throw ParseError("expected a vrep or hrep cone file: " + path);
}

ConeH coneHArg(const std::string& path) {
  ParsedCone c = parseConeFile(path);
  if (c.kind == ParsedCone::Kind::H) return c.h;
  if (c.kind == ParsedCone::Kind::V)
    return ConeH(c.dim, dualCone(c.v).generators);
  throw ParseError("expected a vrep or hrep cone file: " + path);
}

UnionConeV unionArg(const std::string& path) {
  ParsedCone c = parseConeFile(path);
  if (c.kind == ParsedCone::Kind::Union) return c.u;
  if (c.kind == ParsedCone::Kind::V) return UnionConeV{c.dim, {c.v}};
  if (c.kind == ParsedCone::Kind::H)
    return UnionConeV{c.dim, {ConeV(c.dim, hrepToVrep(c.dim, c.h.normals))}};
  throw ParseError("expected a cone file: " + path);
}

const char* boolText(bool b) { return b ? "true" : "false"; }

const char* verdictText(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "Yes";
    case Verdict::No:
      return "No";
    default:
      return "Undetermined";
  }
}

void printVectors(const std::vector<Vector>& vs) {
  for (const auto& v : sortedUnique(vs)) std::cout << formatVector(v) << "\n";
}

AxiomSet axioms(bool transitive, bool continuous) {
  AxiomSet a;
  a.transitivity = transitive;
  a.continuity = continuous;
  return a;
}

void oracleCompare(const std::string& task,
                   const std::vector<std::string>& files,
                   const GridFlags& gf, bool transitive, bool continuous) {
  auto needFiles = [&](size_t n) {
    if (files.size() != n)
      throw ParseError("oracle-compare " + task + ": expected " +
                       std::to_string(n) + " instance file(s)");
  };
  if (task == "membership") {
    needFiles(1);
    ConeV c = coneVArg(files[0]);
    GridSpec grid = gf.grid(c.dim);
    size_t n = 0;
    for (const auto& x : grid.points()) {
      if (memberV(c, x) != membershipOracle(c.generators, x)) {
        std::cout << "disagreement at " << formatVector(x) << "\n";
        throw DomainError("oracle disagreement");
      }
      ++n;
    }
    std::cout << "agree on " << n << " points\n";
  } else if (task == "triviality") {
    needFiles(1);
    RepFamily fam = parseFamilyFile(files[0]);
    if (fam.wholeSpace) throw ParseError("triviality: family has no sets");
    GridSpec grid = gf.grid(fam.dim);
    for (size_t s = 0; s < fam.sets.size(); ++s) {
      auto r = isTrivial(fam.sets[s]);
      if (r.trivial) {
        // One-sided: the grid can confirm but not certify triviality.
        size_t n = 0;
        for (const auto& x : grid.points()) {
          bool hit = false;
          for (const auto& y : fam.sets[s])
            if (pairing(x, y) >= 0) hit = true;
          if (!hit) {
            std::cout << "disagreement at " << formatVector(x) << "\n";
            throw DomainError("oracle disagreement");
          }
          ++n;
        }
        std::cout << "set " << s << ": trivial; necessary-direction pass: all "
                  << n << " points satisfied\n";
      } else {
        for (const auto& y : fam.sets[s])
          if (pairing(*r.witness, y) >= 0)
            throw DomainError("oracle disagreement: invalid witness");
        std::cout << "set " << s << ": not trivial; witness "
                  << formatVector(*r.witness) << " verified\n";
      }
    }
  } else if (task == "feasibility") {
    needFiles(1);
    // Instance: hrep cone file; rows read as strict inequalities, so the
    // question is nonemptiness of the open cone.
    ParsedCone c = parseConeFile(files[0]);
    if (c.kind != ParsedCone::Kind::H)
      throw ParseError("feasibility: expected an hrep cone file");
    LinIneqSystem sys;
    sys.dim = c.dim;
    for (const auto& n : c.h.normals) sys.add(n, Rel::GT);
    GridSpec grid = gf.grid(c.dim);
    auto w = feasible(sys);
    if (w) {
      if (!satisfies(sys, *w)) throw DomainError("oracle disagreement: bad witness");
      std::cout << "feasible; witness " << formatVector(*w) << " verified\n";
    } else {
      // One-sided: grid search can only confirm infeasibility.
      size_t n = 0;
      for (const auto& x : grid.points()) {
        if (satisfies(sys, x)) {
          std::cout << "disagreement at " << formatVector(x) << "\n";
          throw DomainError("oracle disagreement");
        }
        ++n;
      }
      std::cout << "infeasible; necessary-direction pass: all " << n
                << " points unsatisfied\n";
    }
  } else if (task == "family-membership") {
    needFiles(2);
    RepFamily fam = parseFamilyFile(files[0]);
    ConeV c = coneVArg(files[1]);
    require(fam.dim == c.dim, "family-membership: dimension mismatch");
    GridSpec grid = gf.grid(fam.dim);
    size_t n = 0;
    for (const auto& x : grid.points()) {
      if (familyMember(fam, x) != membershipOracle(c.generators, x)) {
        std::cout << "disagreement at " << formatVector(x) << "\n";
        throw DomainError("oracle disagreement");
      }
      ++n;
    }
    std::cout << "agree on " << n << " points\n";
  } else if (task == "implied") {
    needFiles(1);
    PreferenceData data = parseRelationFile(files[0]);
    AxiomSet ax = axioms(transitive, continuous);
    std::vector<Vector> rays = aumannCone(data);
    // Compare the Yes verdict against the brute-force membership oracle on
    // sampled object pairs: asserted endpoints against each other.
    std::vector<Vector> objects;
    for (const auto& [a, b] : data.asserted) {
      objects.push_back(a);
      objects.push_back(b);
    }
    objects = sortedUnique(objects);
    size_t n = 0;
    for (const auto& p : objects) {
      for (const auto& q : objects) {
        bool fast = implied(data, ax, p, q) == Verdict::Yes;
        Vector d(p - q);
        bool slow;
        if (isZero(d)) {
          slow = true;
        } else if (ax.transitivity) {
          slow = membershipOracle(rays, d);
        } else {
          Vector pd = primitive(d);
          slow = false;
          for (const auto& r : rays)
            if (vecEq(pd, r)) slow = true;
        }
        if (fast != slow) {
          std::cout << "disagreement at pair " << formatVector(p) << " | "
                    << formatVector(q) << "\n";
          throw DomainError("oracle disagreement");
        }
        ++n;
      }
    }
    std::cout << "agree on " << n << " pairs\n";
  } else {
    throw ParseError("oracle-compare: unknown task '" + task + "'");
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Exact rational cone-representation calculus"};
  app.require_subcommand(1);

  bool transitive = false, continuous = false;
  std::string format = "text";
  GridFlags gf;
  app.add_flag("--transitive", transitive, "enable the transitivity axiom");
  app.add_flag("--continuous", continuous,
               "record the continuity axiom (no effect on polyhedral data)");
  app.add_option("--nbound", gf.nbound, "grid numerator bound")
      ->check(CLI::PositiveNumber);
  app.add_option("--dens", gf.dens, "grid denominators, comma separated");
  app.add_option("--format", format, "output format (text)")
      ->check(CLI::IsMember({"text"}));

  std::vector<std::string> pos;
  auto addCmd = [&](const std::string& name, const std::string& desc,
                    size_t minArgs, size_t maxArgs) {
    auto* cmd = app.add_subcommand(name, desc);
    cmd->fallthrough();  // global flags may follow the subcommand
    auto args = std::make_shared<std::vector<std::string>>();
    cmd->add_option("args", *args, "arguments")
        ->expected(static_cast<int>(minArgs), static_cast<int>(maxArgs));
    cmd->parse_complete_callback([&, args] { pos = *args; });
    return cmd;
  };

  auto* cmdDual = addCmd("dual", "dual cone of a vrep cone file", 1, 1);
  auto* cmdMember = addCmd("member", "cone membership: cone file + vector", 2, 2);
  auto* cmdContains =
      addCmd("contains", "containment D subset of C: files C D", 2, 2);
  auto* cmdBipolar = addCmd("bipolar-check", "double-dual identity", 1, 1);
  auto* cmdComplete = addCmd("complete", "C u (-C) = X for an hrep cone", 1, 1);
  auto* cmdSeparate =
      addCmd("separate", "separating functional: cone file + vector", 2, 2);
  auto* cmdLemma = addCmd(
      "lemma-witness", "witness y with <c,y><0, <a,y>>=0, <b,y>>=0", 3, 3);
  auto* cmdTrivial = addCmd("trivial", "triviality of each family set", 1, 1);
  auto* cmdFamilyMember =
      addCmd("family-member", "family membership: family file + vector", 2, 2);
  auto* cmdNormalize =
      addCmd("normalize-family", "drop trivial sets, minimize hulls", 1, 1);
  auto* cmdHatEqual =
      addCmd("hat-equal", "hat-operator equality on a grid sample", 2, 2);
  auto* cmdRep2d =
      addCmd("represent-2d", "2-D closed-cone representation family", 1, 1);
  auto* cmdJustK =
      addCmd("justifiable-k", "single compact representing set K", 1, 1);
  auto* cmdEvren =
      addCmd("evren-check", "sub-cone comparison: files A B C", 3, 3);
  auto* cmdImplied =
      addCmd("implied", "implied preference: relation file + two objects", 3, 3);
  auto* cmdMultiU =
      addCmd("multi-utility", "utility set of a transitive relation", 1, 1);
  auto* cmdTransCert =
      addCmd("transitivity-cert", "convexity certificate of the ray union", 1, 1);
  auto* cmdAaImplied =
      addCmd("aa-implied", "implied preference over acts", 3, 3);
  auto* cmdAaMultiU =
      addCmd("aa-multi-utility", "state-dependent utility set", 1, 1);
  auto* cmdOracle =
      addCmd("oracle-compare", "fast path vs brute-force grid oracle", 2, 3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (cmdDual->parsed()) {
    std::cout << formatConeV(dualCone(coneVArg(pos[0])));
  } else if (cmdMember->parsed()) {
    ConeV c = coneVArg(pos[0]);
    bool m = memberV(c, vectorArg(pos[1]));
    std::cout << "member: " << boolText(m) << "\n";
  } else if (cmdContains->parsed()) {
    bool r = contains(coneVArg(pos[0]), coneVArg(pos[1]));
    std::cout << "contains: " << boolText(r) << "\n";
  } else if (cmdBipolar->parsed()) {
    bool r = bipolarCheck(coneVArg(pos[0]));
    std::cout << "bipolar: " << boolText(r) << "\n";
  } else if (cmdComplete->parsed()) {
    bool r = isComplete(coneHArg(pos[0]));
    std::cout << "complete: " << boolText(r) << "\n";
  } else if (cmdSeparate->parsed()) {
    ConeV c = coneVArg(pos[0]);
    Vector x = vectorArg(pos[1]);
    auto y = strongSeparate(c.generators, x);
    if (y)
      std::cout << "separator: " << formatVector(*y) << "\n";
    else
      std::cout << "no separator: the vector is a member\n";
  } else if (cmdLemma->parsed()) {
    Vector a = vectorArg(pos[0]), b = vectorArg(pos[1]), c = vectorArg(pos[2]);
    Vector y = lemmaWitness(a, b, c);
    std::cout << "witness: " << formatVector(y) << "\n"
              << "pairings: a " << formatRational(pairing(a, y)) << ", b "
              << formatRational(pairing(b, y)) << ", c "
              << formatRational(pairing(c, y)) << "\n";
  } else if (cmdTrivial->parsed()) {
    RepFamily fam = parseFamilyFile(pos[0]);
    if (fam.wholeSpace) throw ParseError("trivial: family has no sets");
    for (size_t s = 0; s < fam.sets.size(); ++s) {
      auto r = isTrivial(fam.sets[s]);
      if (r.trivial)
        std::cout << "set " << s << ": trivial\n";
      else
        std::cout << "set " << s << ": not trivial, witness "
                  << formatVector(*r.witness) << "\n";
    }
  } else if (cmdFamilyMember->parsed()) {
    RepFamily fam = parseFamilyFile(pos[0]);
    bool m = familyMember(fam, vectorArg(pos[1]));
    std::cout << "member: " << boolText(m) << "\n";
  } else if (cmdNormalize->parsed()) {
    std::cout << formatFamily(normalizeFamily(parseFamilyFile(pos[0])));
  } else if (cmdHatEqual->parsed()) {
    RepFamily f1 = parseFamilyFile(pos[0]);
    RepFamily f2 = parseFamilyFile(pos[1]);
    require(f1.dim == f2.dim, "hat-equal: dimension mismatch");
    std::vector<Vector> sample;
    for (const auto& x : gf.grid(f1.dim).points())
      if (!isZero(x)) sample.push_back(x);
    auto cx = hatEqualOnSample(f1, f2, sample);
    if (cx)
      std::cout << "not equal, counterexample " << formatVector(*cx) << "\n";
    else
      std::cout << "equal on " << sample.size() << " sample directions\n";
  } else if (cmdRep2d->parsed()) {
    std::cout << formatFamily(closedConeRep2d(unionArg(pos[0])));
  } else if (cmdJustK->parsed()) {
    ConeV k = justifiableK(unionArg(pos[0]));
    if (k.generators.empty())
      std::cout << "K = {0}\n";
    else
      std::cout << formatConeV(k);
  } else if (cmdEvren->parsed()) {
    bool r = evrenCheck(coneVArg(pos[0]), coneVArg(pos[1]), coneVArg(pos[2]));
    std::cout << "agree: " << boolText(r) << "\n";
  } else if (cmdImplied->parsed() || cmdAaImplied->parsed()) {
    PreferenceData data = parseRelationFile(pos[0]);
    bool wantActs = cmdAaImplied->parsed();
    require(data.acts == wantActs,
            wantActs ? "aa-implied: relation file must use acts"
                     : "implied: relation file must use lotteries");
    Vector p, q;
    if (data.acts) {
      p = parseAct(pos[1], data.omega, data.m).flatten();
      q = parseAct(pos[2], data.omega, data.m).flatten();
    } else {
      p = parseLottery(pos[1], data.m).probs;
      q = parseLottery(pos[2], data.m).probs;
    }
    std::cout << verdictText(
                     implied(data, axioms(transitive, continuous), p, q))
              << "\n";
  } else if (cmdMultiU->parsed() || cmdAaMultiU->parsed()) {
    PreferenceData data = parseRelationFile(pos[0]);
    bool wantActs = cmdAaMultiU->parsed();
    require(data.acts == wantActs,
            wantActs ? "aa-multi-utility: relation file must use acts"
                     : "multi-utility: relation file must use lotteries");
    auto us = multiUtility(data, axioms(true, continuous));
    if (data.acts) {
      for (const auto& u : us) {
        std::cout << "utility:";
        for (Index w = 0; w < data.omega; ++w)
          std::cout << (w ? "; " : " ")
                    << formatVector(Vector(u.segment(w * data.m, data.m)));
        std::cout << "\n";
      }
    } else {
      printVectors(us);
    }
  } else if (cmdTransCert->parsed()) {
    auto cert = transitivityCertificate(parseRelationFile(pos[0]));
    if (cert.convex) {
      std::cout << "convex\n";
    } else {
      std::cout << "not convex\n"
                << "rays: " << formatVector(cert.ray1) << ", "
                << formatVector(cert.ray2) << "\n"
                << "combination outside the union: "
                << formatVector(cert.combination) << "\n";
      for (const auto& [ray, y] : cert.separators)
        std::cout << "separator for " << formatVector(ray) << ": "
                  << formatVector(y) << "\n";
    }
  } else if (cmdOracle->parsed()) {
    oracleCompare(pos[0], {pos.begin() + 1, pos.end()}, gf, transitive,
                  continuous);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const conerep::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const conerep::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
