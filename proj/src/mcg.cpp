#include "hcmcg/mcg.hpp"

#include <sstream>

#include "hcmcg/error.hpp"
#include "hcmcg/group_cohomology.hpp"
#include "hcmcg/symplectic.hpp"

namespace hcmcg {

std::string decision_name(Decision d) {
  switch (d) {
    case Decision::Yes: return "Yes";
    case Decision::No: return "No";
    case Decision::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

void require_odd(int n) {
  if (n < 3 || n % 2 == 0) throw UnsupportedCase("this statement is only available for odd n >= 3");
}

void require_genus(int g, int min) {
  if (g < min) throw InvalidArgument("genus must be >= " + std::to_string(min));
}

int mod(int a, int m) { return ((a % m) + m) % m; }

bool exceptional(int n) { return n == 3 || n == 7; }

}  // namespace

FinAbGroup s_pi_n_so(int n) {
  if (n < 3) throw InvalidArgument("Sπ_n SO(n) is tabulated for n >= 3");
  if (n == 6) return FinAbGroup::trivial();
  switch (mod(n, 8)) {
    case 0: return FinAbGroup::from_cyclic_orders({2, 2});
    case 3:
    case 7: return FinAbGroup::free(1);
    case 5: return FinAbGroup::trivial();
    default: return FinAbGroup::cyclic(2);
  }
}

FinAbGroup h1_Gg(int g, int n) {
  require_genus(g, 1);
  if (n % 2 == 0)
    throw UnsupportedCase("H_1(G_g) for even n needs H_1(O_{g,g}(Z)), which is not available");
  if (n == 1 || exceptional(n)) {
    if (g == 1) return FinAbGroup::cyclic(12);
    if (g == 2) return FinAbGroup::cyclic(2);
    return FinAbGroup::trivial();
  }
  if (g == 1) return FinAbGroup::from_cyclic_orders({4, 0});
  if (g == 2) return FinAbGroup::from_cyclic_orders({4, 2});
  return FinAbGroup::cyclic(4);
}

FinAbGroup coinvariants_closed(int g, int n) {
  require_genus(g, 1);
  if (n < 3) throw InvalidArgument("coinvariants need n >= 3");
  FinAbGroup closed;
  if (g >= 2 || n == 3 || n == 6 || n == 7 || mod(n, 8) == 5)
    closed = FinAbGroup::trivial();
  else if (mod(n, 8) == 0)
    closed = FinAbGroup::from_cyclic_orders({2, 2});
  else
    closed = FinAbGroup::cyclic(2);
  if (g <= 3 && coinvariants_from_generators(g, n) != closed)
    throw Error("coinvariants: closed form disagrees with the generator computation at g=" + std::to_string(g) +
                ", n=" + std::to_string(n));
  return closed;
}

FinAbGroup coinvariants_from_generators(int g, int n) {
  require_genus(g, 1);
  GroupFamily family = n % 2 == 0 ? GroupFamily::Ogg : (exceptional(n) ? GroupFamily::Sp : GroupFamily::SpQ);
  return coinvariants(standard_generators(family, g), 2 * g, s_pi_n_so(n));
}

std::vector<GroupElement> k_g_generators(const SphereData& d, int g) {
  if (g >= 2) return {d.sigma_p, d.sigma_q};
  return {d.sigma_q};
}

FinAbGroup h1_torelli(const MCGParams& p) {
  require_odd(p.n);
  require_genus(p.g, 0);
  SphereData d = theta_data(p.n, p.spheres);
  if (p.g == 0) return d.theta;
  return direct_sum({quotient_by(d.theta, {d.sigma_q}), direct_power(s_pi_n_so(p.n), 2 * p.g)});
}

FinAbGroup h1_halfmcg(const MCGParams& p) {
  require_odd(p.n);
  require_genus(p.g, 1);
  return direct_sum({h1_Gg(p.g, p.n), coinvariants_closed(p.g, p.n)});
}

FinAbGroup h1_mcg(const MCGParams& p) {
  require_odd(p.n);
  require_genus(p.g, 0);
  SphereData d = theta_data(p.n, p.spheres);
  if (p.g == 0) return d.theta;
  return direct_sum({quotient_by(d.theta, k_g_generators(d, p.g)), h1_halfmcg(p)});
}

ExtensionDescriptor extension_descriptor(const MCGParams& p) {
  require_odd(p.n);
  require_genus(p.g, 1);
  ExtensionDescriptor e;
  if (p.n % 4 == 1) {
    e.classifying_class = "sgn/8·Σ_P";
    e.citation = "ThmB-case1";
  } else if (exceptional(p.n)) {
    e.classifying_class = "(χ²-sgn)/8·Σ_Q";
    e.citation = "ThmB-case3";
  } else {
    e.classifying_class = "sgn/8·Σ_P + χ²/2·Σ_Q";
    e.citation = "ThmB-case2";
  }
  SphereData d = theta_data(p.n, p.spheres);
  e.d2_image = subgroup_generated(d.theta, k_g_generators(d, p.g));
  e.d2_citation = "MainThm-d2";
  e.splits = p.n % 4 == 1 && p.g == 1;
  e.sigma_q_is_default = d.sigma_q_is_default;
  return e;
}

SplittingDecisions splitting_decisions(int g, int n) {
  require_odd(n);
  require_genus(g, 1);
  SplittingDecisions s;
  if (!exceptional(n))
    s.ext4 = {Decision::Yes, "ThmA"};
  else
    s.ext4 = {g == 1 ? Decision::Yes : Decision::No, "ThmA-n37"};
  s.ext3 = {(n % 4 == 1 && g == 1) ? Decision::Yes : Decision::No, "ThmB-split"};
  if (g >= 2)
    s.kreck1 = {Decision::No, "CorC-i"};
  else if (!exceptional(n))
    s.kreck1 = {Decision::Yes, "CorC-i"};
  else if (n == 3)
    s.kreck1 = {Decision::No, "CorC-i-remark"};
  else
    s.kreck1 = {Decision::Unknown, "CorC-i-remark"};
  s.kreck2 = {n % 4 == 1 ? Decision::Yes : Decision::No, "CorC-ii"};
  return s;
}

HautReport haut_report(int g, int n, const std::optional<FinAbGroup>& s_pi_2n_sn) {
  require_odd(n);
  require_genus(g, 1);
  HautReport r;
  if (!exceptional(n))
    r.splits = {Decision::Yes, "CorE-i"};
  else
    r.splits = {g == 1 ? Decision::Yes : Decision::No, "CorE-i"};
  r.citation = "CorE-ii";
  if (n == 3) r.d_n = Int(12);
  if (n == 7) r.d_n = Int(120);
  r.concrete = h1_Gg(g, n);
  if (g >= 2 || exceptional(n)) return r;
  if (s_pi_2n_sn)
    r.concrete = direct_sum({r.concrete, mod_multiples(*s_pi_2n_sn, 2)});
  else
    r.symbolic_summand = "Sπ_" + std::to_string(2 * n) + "S^" + std::to_string(n) + "/2";
  return r;
}

MCGReport mcg_report(const MCGParams& p) {
  MCGReport r;
  r.g = p.g;
  r.n = p.n;
  r.h1_mcg = h1_mcg(p);
  r.h1_torelli = h1_torelli(p);
  SphereData d = theta_data(p.n, p.spheres);
  if (d.sigma_q_is_default) r.flags.push_back("sigma_q_default_order_2");
  if (p.g >= 1) {
    r.h1_halfmcg = h1_halfmcg(p);
    r.extension = extension_descriptor(p);
    r.decisions = splitting_decisions(p.g, p.n);
  }
  return r;
}

bool Table3Result::ok() const {
  for (const auto& c : cells)
    if (!c.ok()) return false;
  return true;
}

std::string Table3Result::render() const {
  std::ostringstream os;
  for (const auto& c : cells) {
    os << (c.ok() ? "ok   " : "FAIL ") << "H1(" << c.table << ") g=" << c.g << " n=" << c.n << ": "
       << c.computed.to_string();
    if (!c.ok()) os << "   expected " << c.expected.to_string();
    os << "\n";
  }
  return os.str();
}

Table3Result reproduce_table3() {
  const std::vector<int> ns = {3, 5, 7, 9};
  auto grp = [](std::vector<Int> orders) { return FinAbGroup::from_cyclic_orders(orders); };
  auto with_free = [](std::vector<Int> orders, int rank) {
    for (int i = 0; i < rank; ++i) orders.push_back(0);
    return FinAbGroup::from_cyclic_orders(orders);
  };
  auto with_twos = [](std::vector<Int> orders, int count) {
    for (int i = 0; i < count; ++i) orders.push_back(2);
    return FinAbGroup::from_cyclic_orders(orders);
  };
  const std::vector<FinAbGroup> theta = {grp({28}), grp({992}), grp({2, 8128}), grp({2, 261632})};
  // Gamma rows g = 1, 2, >= 3.
  const std::vector<std::vector<FinAbGroup>> gamma = {
      {grp({12}), grp({4, 0, 992}), grp({12, 2}), grp({4, 0, 2, 2, 261632})},
      {grp({2}), grp({4, 2}), grp({2, 2}), grp({2, 2, 4})},
      {grp({}), grp({4}), grp({2}), grp({2, 4})},
  };
  Table3Result out;
  for (std::size_t c = 0; c < ns.size(); ++c) {
    const int n = ns[c];
    out.cells.push_back({"T", 0, n, theta[c], h1_torelli({0, n, {}})});
    out.cells.push_back({"Gamma", 0, n, theta[c], h1_mcg({0, n, {}})});
    for (int g = 1; g <= 4; ++g) {
      FinAbGroup t;
      switch (n) {
        case 3: t = with_free({}, 2 * g); break;
        case 5: t = grp({992}); break;
        case 7: t = with_free({2}, 2 * g); break;
        default: t = with_twos({2, 261632}, 2 * g); break;
      }
      out.cells.push_back({"T", g, n, t, h1_torelli({g, n, {}})});
      out.cells.push_back({"Gamma", g, n, gamma[std::min(g, 3) - 1][c], h1_mcg({g, n, {}})});
    }
  }
  return out;
}

}  // namespace hcmcg
