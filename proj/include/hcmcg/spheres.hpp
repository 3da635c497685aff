#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hcmcg/abgroup.hpp"

namespace hcmcg {

// |B_{2k}| (so B_1 = 1/6, B_2 = 1/30).
Rational bernoulli(unsigned k);

// |bP_{4k}| = 2^{2k-2} (2^{2k-1} - 1) numerator(4 B_k / k), for dim = 4k >= 8.
Int bp_order(unsigned dim);

// Environment variable naming a JSON file that extends the coker J table.
inline constexpr const char* kCokerJTableEnv = "HCMCG_COKERJ_TABLE";

class CokerJTable {
 public:
  // Degrees 7, 11, 15, 19.
  static CokerJTable builtin();
  // Built-ins plus the file named by the environment variable, if set.
  static CokerJTable from_environment();

  // Adds entries from a JSON list [{"degree": d, "rank": r, "torsion": [...]}, ...].
  void load_file(const std::string& path);
  void load_json_text(const std::string& text);
  void set(unsigned degree, const FinAbGroup& group) { table_[degree] = group; }

  bool contains(unsigned degree) const { return table_.count(degree) != 0; }
  // Throws TableExhausted naming the extension point.
  FinAbGroup lookup(unsigned degree) const;

 private:
  std::map<unsigned, FinAbGroup> table_;
};

struct SphereOptions {
  // Overrides the coker J table (otherwise built-ins plus environment).
  std::optional<std::string> cokerj_table_path;
  // Sigma_Q as a*Sigma_P + sum c_i (coker J generator i): coordinates (a, c_1, ..., c_t).
  std::optional<IntVector> sigma_q;

  CokerJTable table() const;
};

FinAbGroup coker_j(unsigned degree, const SphereOptions& opts = {});

struct SphereData {
  int n = 0;
  FinAbGroup theta;
  FinAbGroup coker_j;
  Int bp;
  GroupElement sigma_p, sigma_q;
  std::vector<GroupElement> bp_generators, ba_generators;
  // Sigma_Q was placed by the default order-2 rule rather than known or supplied.
  bool sigma_q_is_default = false;
};

SphereData theta_data(int n, const SphereOptions& opts = {});

struct AlmostClosedInvariants {
  Int sgn;
  std::optional<Int> chi2;  // present iff n = 3 mod 4
};

GroupElement boundary_of_plumbing(const AlmostClosedInvariants& inv, int n, const SphereOptions& opts = {});

// "0", "Σ_P", "Σ_Q", "k·Σ_P", or the coordinates.
std::string describe_theta_element(const SphereData& data, const GroupElement& x);

FinAbGroup omega_tau(int n, const SphereOptions& opts = {});

Int minimal_signature(int n, const SphereOptions& opts = {});

}  // namespace hcmcg
