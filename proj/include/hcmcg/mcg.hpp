#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hcmcg/abgroup.hpp"
#include "hcmcg/spheres.hpp"

namespace hcmcg {

struct MCGParams {
  int g = 1;
  int n = 3;
  SphereOptions spheres;
};

enum class Decision { Yes, No, Unknown };
std::string decision_name(Decision d);

struct DecisionRecord {
  Decision value = Decision::Unknown;
  std::string citation;
};

// Sπ_n SO(n), the image of π_n SO(n) -> π_n SO(n+1).
FinAbGroup s_pi_n_so(int n);

// H_1(G_g) for n odd.
FinAbGroup h1_Gg(int g, int n);

// (H(g) ⊗ Sπ_n SO(n))_{G_g} in closed form.
FinAbGroup coinvariants_closed(int g, int n);
// The same from standard generator matrices and Smith normal form.
FinAbGroup coinvariants_from_generators(int g, int n);

FinAbGroup h1_torelli(const MCGParams& p);
FinAbGroup h1_mcg(const MCGParams& p);
// H_1(Γ/Θ) = H_1(G_g) ⊕ coinvariants.
FinAbGroup h1_halfmcg(const MCGParams& p);

// Generators of K_g inside Θ.
std::vector<GroupElement> k_g_generators(const SphereData& d, int g);

struct ExtensionDescriptor {
  std::string classifying_class;  // "sgn/8·Σ_P", "sgn/8·Σ_P + χ²/2·Σ_Q" or "(χ²-sgn)/8·Σ_Q"
  std::string citation;
  FinAbGroup d2_image;
  std::string d2_citation;
  bool splits = false;
  bool sigma_q_is_default = false;
};

ExtensionDescriptor extension_descriptor(const MCGParams& p);

struct SplittingDecisions {
  DecisionRecord ext4;    // 0 -> H(g)⊗Sπ_nSO(n) -> Γ/Θ -> G_g -> 0
  DecisionRecord ext3;    // 0 -> Θ -> Γ -> Γ/Θ -> 0
  DecisionRecord kreck1;  // 0 -> T -> Γ -> G_g -> 0
  DecisionRecord kreck2;  // 0 -> Θ -> T -> H(g)⊗Sπ_nSO(n) -> 0
};

SplittingDecisions splitting_decisions(int g, int n);

struct HautReport {
  DecisionRecord splits;
  // H_1(π_0 hAut(W_g)) = concrete ⊕ (symbolic summand, if any).
  FinAbGroup concrete;
  std::optional<std::string> symbolic_summand;
  std::string citation;
  // d_n with Sπ_{2n}S^n = Z/d_n, for n = 3, 7.
  std::optional<Int> d_n;
};

// `s_pi_2n_sn` makes the result concrete outside the cases where it already is.
HautReport haut_report(int g, int n, const std::optional<FinAbGroup>& s_pi_2n_sn = std::nullopt);

struct MCGReport {
  int g = 0, n = 0;
  FinAbGroup h1_mcg, h1_torelli;
  std::optional<FinAbGroup> h1_halfmcg;
  std::optional<ExtensionDescriptor> extension;
  std::optional<SplittingDecisions> decisions;
  std::vector<std::string> flags;
};

MCGReport mcg_report(const MCGParams& p);

struct Table3Cell {
  std::string table;  // "Gamma" or "T"
  int g = 0, n = 0;   // g = 3 stands for g >= 3 in the Gamma table
  FinAbGroup expected, computed;
  bool ok() const { return expected == computed; }
};

struct Table3Result {
  std::vector<Table3Cell> cells;
  bool ok() const;
  std::string render() const;
};

Table3Result reproduce_table3();

}  // namespace hcmcg
