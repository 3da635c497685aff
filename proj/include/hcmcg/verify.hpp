#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hcmcg {

struct CheckResult {
  std::string suite;
  std::string name;
  bool ok = false;
  std::string detail;
};

// Suites: tables, appendix, cocycles, spheres, all.
std::vector<CheckResult> run_verification(const std::string& suite, std::uint64_t seed);
std::vector<std::string> verification_suites();

}  // namespace hcmcg
