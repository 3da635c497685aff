#include "hcmcg/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <sstream>

#include "hcmcg/cocycles.hpp"
#include "hcmcg/error.hpp"
#include "hcmcg/json_io.hpp"
#include "hcmcg/mcg.hpp"
#include "hcmcg/spheres.hpp"
#include "hcmcg/symplectic.hpp"
#include "hcmcg/verify.hpp"

namespace hcmcg {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Int> parse_int_list(const std::string& flag, const std::string& text) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    Int v;
    if (item.empty() || v.set_str(item, 10) != 0) throw UsageError(flag + ": '" + text + "' is not a list of integers");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError(flag + ": empty list");
  return out;
}

Json decision_json(const DecisionRecord& d) { return {{"value", decision_name(d.value)}, {"citation", d.citation}}; }

Json element_report(const SphereData& d, const GroupElement& x) {
  return {{"element", element_to_json(x)}, {"name", describe_theta_element(d, x)}};
}

struct Globals {
  std::string format = "text";
  std::string sigma_q;
  std::string cokerj_table;

  SphereOptions spheres() const {
    SphereOptions o;
    if (!cokerj_table.empty()) o.cokerj_table_path = cokerj_table;
    if (!sigma_q.empty()) o.sigma_q = parse_int_list("--sigma-q", sigma_q);
    return o;
  }
  bool json() const { return format == "json"; }
};

void emit(std::ostream& out, const Globals& gl, const Json& j, const std::string& text) {
  if (gl.json())
    out << j.dump() << "\n";
  else
    out << text << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of mapping class groups of #^g(S^n x S^n)", "hcmcg"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--sigma-q", gl.sigma_q, "Σ_Q as coordinates a,c_1,...,c_t in bP ⊕ coker J");
  app.add_option("--cokerj-table", gl.cokerj_table, "JSON file extending the coker J table");

  int g = -1, n = -1;
  std::string group_name = "mcg", method = "closed";
  auto* ab = app.add_subcommand("abelianization", "H_1 of Γ, T, Γ/Θ, G_g or related groups");
  ab->add_option("--g", g)->required();
  ab->add_option("--n", n)->required();
  ab->add_option("--group", group_name)
      ->check(CLI::IsMember({"mcg", "torelli", "halfmcg", "Gg", "theta", "omega", "spi", "coinvariants"}));
  ab->add_option("--method", method, "For coinvariants")->check(CLI::IsMember({"closed", "generators"}));

  bool haut = false;
  std::string s_pi_2n_sn;
  auto* sp = app.add_subcommand("splits", "Splitting decisions and extension data");
  sp->add_option("--g", g)->required();
  sp->add_option("--n", n)->required();
  sp->add_flag("--haut", haut, "Report on the homotopy automorphism extension instead");
  sp->add_option("--s-pi-2n-sn", s_pi_2n_sn, "Cyclic orders of Sπ_{2n}S^n (0 for Z)");

  std::string sgn_text, chi2_text;
  auto* bd = app.add_subcommand("boundary", "Boundary sphere of an almost closed manifold");
  bd->add_option("--n", n)->required();
  bd->add_option("--sgn", sgn_text)->required();
  bd->add_option("--chi2", chi2_text);

  std::string file, divided;
  auto* sg = app.add_subcommand("signature", "Signature of a surface class");
  sg->add_option("--file", file)->required()->check(CLI::ExistingFile);
  sg->add_option("--divided", divided)->check(CLI::IsMember({"sgn/8", "(chi2-sgn)/8"}));
  auto* ch = app.add_subcommand("chi2", "χ² of an affine surface class");
  ch->add_option("--file", file)->required()->check(CLI::ExistingFile);
  ch->add_option("--divided", divided)->check(CLI::IsMember({"chi2/2", "(chi2-sgn)/8"}));

  auto* th = app.add_subcommand("theta", "Θ_{2n+1} data, or the theta-group index with --g alone");
  th->add_option("--n", n);
  th->add_option("--g", g);

  auto* t3 = app.add_subcommand("table3", "Reproduce the abelianisation table");

  std::string suite = "all";
  std::uint64_t seed = 0;
  auto* vf = app.add_subcommand("verify", "Run embedded verification suites");
  vf->add_option("--suite", suite)->check(CLI::IsMember(verification_suites()));
  vf->add_option("--seed", seed);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (ab->parsed()) {
      MCGParams p{g, n, gl.spheres()};
      FinAbGroup r;
      if (group_name == "mcg") r = h1_mcg(p);
      else if (group_name == "torelli") r = h1_torelli(p);
      else if (group_name == "halfmcg") r = h1_halfmcg(p);
      else if (group_name == "Gg") r = h1_Gg(g, n);
      else if (group_name == "theta") r = theta_data(n, p.spheres).theta;
      else if (group_name == "omega") r = omega_tau(n, p.spheres);
      else if (group_name == "spi") r = s_pi_n_so(n);
      else r = method == "closed" ? coinvariants_closed(g, n) : coinvariants_from_generators(g, n);
      emit(out, gl, group_to_json(r), r.to_string());
      return 0;
    }
    if (sp->parsed()) {
      if (haut) {
        std::optional<FinAbGroup> extra;
        if (!s_pi_2n_sn.empty()) extra = FinAbGroup::from_cyclic_orders(parse_int_list("--s-pi-2n-sn", s_pi_2n_sn));
        HautReport h = haut_report(g, n, extra);
        Json j = {{"splits", decision_json(h.splits)}, {"h1", group_to_json(h.concrete)}, {"citation", h.citation}};
        std::string text = "splits: " + decision_name(h.splits.value) + " [" + h.splits.citation + "]\nH_1: " +
                           h.concrete.to_string();
        if (h.symbolic_summand) {
          j["symbolic_summand"] = *h.symbolic_summand;
          text += " ⊕ " + *h.symbolic_summand;
        }
        if (h.d_n) j["d_n"] = int_to_json(*h.d_n);
        text += " [" + h.citation + "]";
        emit(out, gl, j, text);
        return 0;
      }
      if (!s_pi_2n_sn.empty()) throw UsageError("--s-pi-2n-sn requires --haut");
      SplittingDecisions d = splitting_decisions(g, n);
      Json j = {{"ext4", decision_json(d.ext4)},
                {"ext3", decision_json(d.ext3)},
                {"kreck1", decision_json(d.kreck1)},
                {"kreck2", decision_json(d.kreck2)}};
      std::string text;
      for (auto [name, rec] : {std::pair{"ext4", d.ext4}, {"ext3", d.ext3}, {"kreck1", d.kreck1}, {"kreck2", d.kreck2}})
        text += std::string(text.empty() ? "" : "\n") + name + ": " + decision_name(rec.value) + " [" + rec.citation + "]";
      if (g >= 1) {
        ExtensionDescriptor e = extension_descriptor({g, n, gl.spheres()});
        j["extension"] = {{"class", e.classifying_class},  {"citation", e.citation},
                          {"d2_image", group_to_json(e.d2_image)}, {"d2_citation", e.d2_citation},
                          {"splits", e.splits}};
        text += "\nextension class: " + e.classifying_class + " [" + e.citation + "]";
        text += "\nd2 image: " + e.d2_image.to_string() + " [" + e.d2_citation + "]";
        if (e.sigma_q_is_default) {
          j["flags"] = Json::array({"sigma_q_default_order_2"});
          text += "\nflag: sigma_q_default_order_2";
        }
      }
      emit(out, gl, j, text);
      return 0;
    }
    if (bd->parsed()) {
      AlmostClosedInvariants inv;
      inv.sgn = parse_int_list("--sgn", sgn_text).at(0);
      if (!chi2_text.empty()) inv.chi2 = parse_int_list("--chi2", chi2_text).at(0);
      SphereOptions o = gl.spheres();
      SphereData d = theta_data(n, o);
      GroupElement x = boundary_of_plumbing(inv, n, o);
      Json j = element_report(d, x);
      if (d.sigma_q_is_default) j["flags"] = Json::array({"sigma_q_default_order_2"});
      emit(out, gl, j, describe_theta_element(d, x));
      return 0;
    }
    if (sg->parsed() || ch->parsed()) {
      Json data = parse_json_file(file);
      AffineSurfaceClass c = class_from_json(data);
      const bool signature = sg->parsed();
      if (!signature && !class_json_has_translations(data))
        throw UsageError("--file: chi2 needs a class with translations");
      std::string key;
      Int v;
      if (!divided.empty()) {
        key = divided;
        v = divided_eval(parse_divided_class(divided), c);
      } else if (signature) {
        key = "signature";
        v = signature_of_class(c.base);
      } else {
        key = "chi2";
        v = chi2_of_class(c);
      }
      emit(out, gl, Json{{key, int_to_json(v)}}, v.get_str());
      return 0;
    }
    if (th->parsed()) {
      if (n < 0 && g < 0) throw UsageError("theta: one of --n or --g is required");
      if (n < 0) {
        if (g < 1) throw UsageError("--g: must be positive");
        Int idx = theta_index(static_cast<std::size_t>(g));
        emit(out, gl, Json{{"g", g}, {"index", int_to_json(idx)}}, idx.get_str());
        return 0;
      }
      SphereData d = theta_data(n, gl.spheres());
      Json j = {{"n", n},
                {"theta", group_to_json(d.theta)},
                {"coker_j", group_to_json(d.coker_j)},
                {"bp", int_to_json(d.bp)},
                {"sigma_p", element_to_json(d.sigma_p)},
                {"sigma_q", element_report(d, d.sigma_q)}};
      std::string text = "Θ_" + std::to_string(2 * n + 1) + " = " + d.theta.to_string() +
                         "\ncoker J = " + d.coker_j.to_string() + "\n|bP| = " + d.bp.get_str() +
                         "\nΣ_Q = " + describe_theta_element(d, d.sigma_q);
      if (d.sigma_q_is_default) {
        j["flags"] = Json::array({"sigma_q_default_order_2"});
        text += "\nflag: sigma_q_default_order_2";
      }
      emit(out, gl, j, text);
      return 0;
    }
    if (t3->parsed()) {
      Table3Result t = reproduce_table3();
      Json cells = Json::array();
      for (const auto& c : t.cells)
        cells.push_back({{"table", c.table},
                         {"g", c.g},
                         {"n", c.n},
                         {"computed", group_to_json(c.computed)},
                         {"expected", group_to_json(c.expected)},
                         {"ok", c.ok()}});
      emit(out, gl, Json{{"ok", t.ok()}, {"cells", cells}}, t.render());
      return t.ok() ? 0 : 1;
    }
    if (vf->parsed()) {
      auto results = run_verification(suite, seed);
      bool ok = true;
      Json j = Json::array();
      std::string text;
      for (const auto& r : results) {
        ok = ok && r.ok;
        j.push_back({{"suite", r.suite}, {"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
        text += std::string(text.empty() ? "" : "\n") + (r.ok ? "PASS " : "FAIL ") + r.suite + "/" + r.name + ": " +
                r.detail;
      }
      emit(out, gl, j, text);
      return ok ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace hcmcg
