#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(CONEREP_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 512> buf;
  while (fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::string inst(const std::string& name) {
  return std::string(CONEREP_INSTANCE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("dual prints sorted generators") {
  auto r = run("dual " + inst("orthant_v.txt"));
  CHECK(r.status == 0);
  CHECK(r.out == "dim 2\nvrep\n0 1\n1 0\n");
}

TEST_CASE("membership and separation") {
  CHECK(run("member " + inst("orthant_v.txt") + " \"(2, 3)\"").out ==
        "member: true\n");
  CHECK(run("member " + inst("orthant_v.txt") + " \"(-1, 0)\"").out ==
        "member: false\n");
  auto sep = run("separate " + inst("orthant_v.txt") + " \"(-1, -1)\"");
  CHECK(sep.status == 0);
  CHECK(sep.out.find("separator:") == 0);
  CHECK(run("separate " + inst("orthant_v.txt") + " \"(2, 3)\"").out ==
        "no separator: the vector is a member\n");
}

TEST_CASE("containment, bipolar, completeness") {
  CHECK(run("contains " + inst("orthant_v.txt") + " " + inst("ray_diag.txt"))
            .out == "contains: true\n");
  CHECK(run("contains " + inst("ray_diag.txt") + " " + inst("orthant_v.txt"))
            .out == "contains: false\n");
  CHECK(run("bipolar-check " + inst("skewed_v.txt")).out == "bipolar: true\n");
  CHECK(run("complete " + inst("halfplane_h.txt")).out == "complete: true\n");
  CHECK(run("complete " + inst("orthant_h.txt")).out == "complete: false\n");
}

TEST_CASE("lemma witness output") {
  auto r = run("lemma-witness " + inst("vec_a.txt") + " " + inst("vec_b.txt") +
               " " + inst("vec_c.txt"));
  CHECK(r.status == 0);
  CHECK(r.out == "witness: (1, 1)\npairings: a 1, b 1, c -2\n");
}

TEST_CASE("family subcommands") {
  CHECK(run("family-member " + inst("family_orthant.txt") + " \"(1, -1)\"")
            .out == "member: false\n");
  CHECK(run("family-member " + inst("family_orthant.txt") + " \"(1, 1)\"")
            .out == "member: true\n");
  CHECK(run("normalize-family " + inst("family_trivial.txt")).out ==
        "dim 2\nfamily 1\nset 1\n0 1\n");
  auto he = run("hat-equal " + inst("family_orthant.txt") + " " +
                inst("family_scaled.txt"));
  CHECK(he.status == 0);
  CHECK(he.out.find("equal on") == 0);
  auto tr = run("trivial " + inst("family_trivial.txt"));
  CHECK(tr.out.find("set 0: trivial") != std::string::npos);
  CHECK(tr.out.find("set 1: not trivial") != std::string::npos);
}

TEST_CASE("representation constructors") {
  auto rep = run("represent-2d " + inst("two_rays_union.txt"));
  CHECK(rep.status == 0);
  CHECK(rep.out.find("family 3") != std::string::npos);
  CHECK(run("justifiable-k " + inst("halfplane_union.txt")).out ==
        "dim 2\nvrep\n1 0\n");
  CHECK(run("evren-check " + inst("ray_diag.txt") + " " +
            inst("orthant_v.txt") + " " + inst("orthant_v.txt"))
            .out == "agree: true\n");
}

TEST_CASE("decision subcommands and the transitivity flag") {
  std::string rel = inst("chain_rel.txt");
  CHECK(run("implied " + rel + " \"(1, 0, 0)\" \"(0, 0, 1)\"").out ==
        "Undetermined\n");
  CHECK(run("implied " + rel + " \"(1, 0, 0)\" \"(0, 0, 1)\" --transitive")
            .out == "Yes\n");
  CHECK(run("--transitive multi-utility " + rel).out ==
        "(1, 0, 0)\n(1, 1, 0)\n");
  auto cert = run("transitivity-cert " + rel);
  CHECK(cert.out.find("not convex") == 0);
  CHECK(cert.out.find("combination outside the union: (1, 0, -1)") !=
        std::string::npos);

  std::string acts = inst("acts_rel.txt");
  CHECK(run("aa-implied " + acts +
            " \"(1, 0); (1, 0)\" \"(0, 1); (0, 1)\" --transitive")
            .out == "Yes\n");
  auto aau = run("--transitive aa-multi-utility " + acts);
  CHECK(aau.status == 0);
  CHECK(aau.out.find("utility:") == 0);
}

TEST_CASE("oracle-compare agrees on every shipped instance") {
  CHECK(run("oracle-compare membership " + inst("orthant_v.txt")).out ==
        "agree on 361 points\n");
  CHECK(run("oracle-compare membership " + inst("skewed_v.txt")).status == 0);
  auto tr = run("oracle-compare triviality " + inst("family_trivial.txt"));
  CHECK(tr.status == 0);
  CHECK(tr.out.find("necessary-direction pass") != std::string::npos);
  CHECK(run("oracle-compare feasibility " + inst("open_strict.txt")).out ==
        "infeasible; necessary-direction pass: all 361 points unsatisfied\n");
  CHECK(run("oracle-compare feasibility " + inst("orthant_h.txt")).status ==
        0);
  CHECK(run("oracle-compare family-membership " + inst("family_orthant.txt") +
            " " + inst("orthant_v.txt"))
            .out == "agree on 361 points\n");
  CHECK(run("oracle-compare implied " + inst("chain_rel.txt")).status == 0);
  CHECK(run("oracle-compare implied " + inst("chain_rel.txt") +
            " --transitive")
            .status == 0);
}

TEST_CASE("grid flags change the oracle sample") {
  auto r = run("oracle-compare membership " + inst("orthant_v.txt") +
               " --nbound 3 --dens 1,2");
  // 11 distinct coordinate values (p/q, |p| <= 3, q in {1,2}), squared.
  CHECK(r.out == "agree on 121 points\n");
}

TEST_CASE("round trip: printed output re-parses to the same output") {
  auto once = run("dual " + inst("skewed_v.txt"));
  REQUIRE(once.status == 0);
  std::string tmp = "/tmp/conerep_roundtrip.txt";
  {
    FILE* f = fopen(tmp.c_str(), "w");
    REQUIRE(f != nullptr);
    fputs(once.out.c_str(), f);
    fclose(f);
  }
  // dual is an involution on canonical data, so two more applications
  // reproduce the first result.
  auto twice = run("dual " + tmp);
  REQUIRE(twice.status == 0);
  std::string tmp2 = "/tmp/conerep_roundtrip2.txt";
  {
    FILE* f = fopen(tmp2.c_str(), "w");
    REQUIRE(f != nullptr);
    fputs(twice.out.c_str(), f);
    fclose(f);
  }
  CHECK(run("dual " + tmp2).out == once.out);
}

TEST_CASE("exit codes: 1 for domain errors, 2 for parse errors") {
  auto dom = run("justifiable-k " + inst("two_rays_union.txt"));
  CHECK(dom.status == 1);
  CHECK(dom.out.find("completeness") != std::string::npos);

  CHECK(run("member " + inst("orthant_v.txt") + " \"(x)\"").status == 2);
  CHECK(run("dual /nonexistent.txt").status == 2);
  CHECK(run("nosuchcommand").status == 2);
  CHECK(run("--transitive").status == 2);
  auto mismatch = run("member " + inst("orthant_v.txt") + " \"(1, 2, 3)\"");
  CHECK(mismatch.status == 1);
}
