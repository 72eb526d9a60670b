// Acceptance suite: runs every acceptance criterion at its stated strength
// (all checks are exact equalities) and prints one PASS/FAIL line each.
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "skeintorus/cli.hpp"
#include "skeintorus/verify.hpp"

using namespace skeintorus;

namespace {

struct Criterion {
  std::string summary;
  std::vector<std::string> check_ids;  // all must pass
};

}  // namespace

int main() {
  VerifyOptions options;
#ifdef SKEINTORUS_SOURCE_DIR
  options.fixture_dir = std::string(SKEINTORUS_SOURCE_DIR) + "/share/surfaces";
#endif

  std::map<std::string, CheckResult> byid;
  for (CheckResult& r : run_verification(options)) byid[r.id] = std::move(r);

  const std::vector<Criterion> criteria = {
      {"1. Chebyshev expansion equals brute force for 1 <= n <= 12", {"cheb.closed_form"}},
      {"2. root-of-unity collapse for 2 <= n <= 10 with m = 4n", {"cheb.collapse"}},
      {"3. c(n,r,j) lies in N[q^{+-1}] for n <= 12", {"scalars.positivity"}},
      {"4. torus laws on 1000 seeded random instances", {"torus.laws"}},
      {"5. Frobenius homomorphism, support-injective, scale-checked", {"frobenius.hom"}},
      {"6. Gauss-binomial criterion and flip compatibility for m <= 64",
       {"scalars.gauss_criterion", "flips.gauss_criterion"}},
      {"7. annulus computations (skein identity and threading at m = 16)",
       {"annulus.skein", "annulus.threading"}},
      {"8. scalar threading identity for every m <= 64", {"scalars.threading_identity"}},
      {"9. annulus vertex matrix golden values", {"surface.golden", "surface.builtins"}},
      {"10. center lattice equals span{k_beta} on builtins and 20 flip-derived",
       {"center.lattice"}},
      {"11. surgery algebra: relation, theta, associativity",
       {"surgery.relation", "surgery.theta", "surgery.assoc"}},
      {"12. plug-hole kernel and window bijection", {"surgery.plug"}},
      {"13. flip and transfer round trips", {"flips.roundtrip"}},
      {"14. CLI: verify --mod 16 exits 0, round trips, annulus fixture", {}},
  };

  bool all = true;
  for (const Criterion& c : criteria) {
    bool pass = true;
    std::string detail;
    if (c.summary[0] == '1' && c.summary[1] == '4') {
      std::ostringstream out, err;
      std::vector<std::string> args{"verify", "--mod", "16"};
      if (!options.fixture_dir.empty()) {
        args.push_back("--fixtures");
        args.push_back(options.fixture_dir);
      }
      int code = cli::run(args, out, err);
      if (code != 0) {
        pass = false;
        detail = "verify --mod 16 exited " + std::to_string(code) + "; " + err.str();
      }
      for (const char* id : {"cli.roundtrip", "cli.fixture"}) {
        const CheckResult& r = byid.at(id);
        if (!r.pass) {
          pass = false;
          detail += std::string(id) + ": " + r.detail + " ";
        }
      }
    }
    for (const std::string& id : c.check_ids) {
      auto it = byid.find(id);
      if (it == byid.end()) {
        pass = false;
        detail += id + " missing ";
        continue;
      }
      if (!it->second.pass) {
        pass = false;
        detail += id + ": " + it->second.detail + " ";
      }
    }
    all = all && pass;
    std::cout << (pass ? "PASS" : "FAIL") << "  " << c.summary << "\n";
    if (!pass) std::cout << "      " << detail << "\n";
  }
  return all ? 0 : 1;
}
