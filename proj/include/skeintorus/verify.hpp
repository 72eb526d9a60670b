#pragma once

#include <string>
#include <vector>

namespace skeintorus {

struct CheckResult {
  std::string id;     // e.g. "cheb.closed_form"
  std::string title;  // human-readable identity name
  bool pass = false;
  std::string detail;  // failure diagnostics
};

struct VerifyOptions {
  long mod = 0;                  // cyclotomic order for mode-flexible checks, 0 = symbolic
  unsigned long long seed = 20250809;
  std::string suite;             // run only checks whose id starts with this prefix
  std::string fixture_dir;       // where .srf fixtures live; empty = use embedded copies
};

std::vector<CheckResult> run_verification(const VerifyOptions& options);

// The canonical annulus fixture file contents (also shipped in share/surfaces).
const std::string& annulus_fixture_text();

}  // namespace skeintorus
