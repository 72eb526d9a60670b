#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "skeintorus/cli.hpp"
#include "skeintorus/verify.hpp"

using namespace skeintorus;

namespace {

struct RunResult {
  int code;
  std::string out, err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
  return std::string(SKEINTORUS_SOURCE_DIR) + "/share/surfaces/" + name;
}

}  // namespace

TEST_CASE("vmatrix prints the golden annulus matrix") {
  RunResult r = run({"vmatrix", fixture("annulus2.srf")});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "edges: a b c d\n"
        "a:   0  -2   0   0\n"
        "b:   2   0   0   0\n"
        "c:   0   0   0   0\n"
        "d:   0   0   0   0\n");
}

TEST_CASE("cheb expand prints the closed form") {
  RunResult r = run({"cheb", "expand", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "(q^-1 + q) * [E K^-1] + (q^-1 + q) * [E K] + E^2 + K^-2 + K^2\n");
  RunResult collapsed = run({"cheb", "expand", "--n", "5", "--mod", "20"});
  CHECK(collapsed.out == "E^5 + K^-5 + K^5\n");
}

TEST_CASE("transfer prints the flipped coordinate") {
  RunResult r = run({"transfer", fixture("annulus2.srf"), "--edge", "b", "--expr", "b"});
  CHECK(r.code == 0);
  CHECK(r.out == "[a^2 b*^-1] + [b*^-1 c d]\n");
}

TEST_CASE("output is byte-stable across runs") {
  std::vector<std::string> args{"verify", "--suite", "surface"};
  RunResult a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("center subcommand reports the lattice") {
  RunResult r = run({"center", fixture("eye.srf")});
  CHECK(r.code == 0);
  CHECK(r.out.find("nullity: 1") != std::string::npos);
  CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("surgery subcommands") {
  RunResult mul = run({"surgery", "mul", fixture("eye.srf"), "--lhs", "a", "--rhs", "a*"});
  CHECK(mul.code == 0);
  CHECK(mul.out == "[b beta c] + q^2 * b^2 + q^-2 * c^2\n");
  RunResult plug =
      run({"surgery", "plug", fixture("eye3.srf"), "--hole", "beta", "--expr", "beta"});
  CHECK(plug.code == 0);
  CHECK(plug.out.find("removed: a x") != std::string::npos);
  CHECK(plug.out.find("-q^-2 - q^2") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"vmatrix", "/no/such/file.srf"}).code == 2);
  CHECK(run({"transfer", fixture("quad.srf"), "--edge", "a", "--expr", "a +"}).code == 2);
  CHECK(run({"transfer", fixture("quad.srf"), "--edge", "a", "--expr", "zz"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"flip", fixture("quad.srf"), "--edge", "b"}).code == 1);  // boundary edge
}

TEST_CASE("verify subcommand honors suite filters and seeds") {
  RunResult r = run({"verify", "--suite", "scalars.q_pascal"});
  CHECK(r.code == 0);
  CHECK(r.out == "PASS  Gaussian binomials satisfy the q-Pascal recursion  (scalars.q_pascal)\n");
  RunResult seeded = run({"verify", "--suite", "torus", "--seed", "42"});
  CHECK(seeded.code == 0);
}
