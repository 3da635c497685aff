#include "hcmcg/spheres.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hcmcg/error.hpp"

namespace hcmcg {

Rational bernoulli(unsigned k) {
  if (k < 1) throw InvalidArgument("bernoulli: index must be >= 1");
  const unsigned top = 2 * k;
  std::vector<Rational> b(top + 1);
  b[0] = 1;
  for (unsigned m = 1; m <= top; ++m) {
    Rational s = 0;
    Int binom = 1;  // C(m+1, j)
    for (unsigned j = 0; j < m; ++j) {
      s += Rational(binom) * b[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    b[m] = -s / Rational(m + 1);
    b[m].canonicalize();
  }
  return abs(b[top]);
}

Int bp_order(unsigned dim) {
  if (dim < 8 || dim % 4 != 0) throw InvalidArgument("bp_order: dimension must be 4k with k >= 2");
  const unsigned k = dim / 4;
  Rational q = Rational(4) * bernoulli(k) / Rational(k);
  q.canonicalize();
  Int a, b;
  mpz_ui_pow_ui(a.get_mpz_t(), 2, 2 * k - 2);
  mpz_ui_pow_ui(b.get_mpz_t(), 2, 2 * k - 1);
  return a * (b - 1) * q.get_num();
}

CokerJTable CokerJTable::builtin() {
  CokerJTable t;
  t.set(7, FinAbGroup::trivial());
  t.set(11, FinAbGroup::trivial());
  t.set(15, FinAbGroup::cyclic(2));
  t.set(19, FinAbGroup::cyclic(2));
  return t;
}

CokerJTable CokerJTable::from_environment() {
  CokerJTable t = builtin();
  if (const char* path = std::getenv(kCokerJTableEnv); path && *path) t.load_file(path);
  return t;
}

void CokerJTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read coker J table '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  load_json_text(ss.str());
}

void CokerJTable::load_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("coker J table is not valid JSON: ") + e.what());
  }
  if (!j.is_array()) throw InvalidArgument("coker J table must be a JSON list");
  for (const auto& entry : j) {
    if (!entry.is_object() || !entry.contains("degree"))
      throw InvalidArgument("coker J table entries need a \"degree\" field");
    unsigned degree = entry.at("degree").get<unsigned>();
    std::size_t rank = entry.value("rank", 0u);
    std::vector<Int> torsion;
    for (const auto& d : entry.value("torsion", nlohmann::json::array())) {
      if (d.is_string())
        torsion.emplace_back(d.get<std::string>());
      else
        torsion.emplace_back(d.get<long>());
    }
    std::vector<Int> orders(rank, Int(0));
    orders.insert(orders.end(), torsion.begin(), torsion.end());
    set(degree, FinAbGroup::from_cyclic_orders(orders));
  }
}

FinAbGroup CokerJTable::lookup(unsigned degree) const {
  auto it = table_.find(degree);
  if (it == table_.end())
    throw TableExhausted("coker J in degree " + std::to_string(degree) +
                         " is not tabulated; extend the table with a JSON file named by " + kCokerJTableEnv +
                         " or --cokerj-table");
  return it->second;
}

CokerJTable SphereOptions::table() const {
  if (!cokerj_table_path) return CokerJTable::from_environment();
  CokerJTable t = CokerJTable::builtin();
  t.load_file(*cokerj_table_path);
  return t;
}

FinAbGroup coker_j(unsigned degree, const SphereOptions& opts) { return opts.table().lookup(degree); }

namespace {

void require_supported_n(int n) {
  if (n < 3 || n % 2 == 0) throw UnsupportedCase("homotopy sphere data is only assembled for odd n >= 3");
}

// Coordinates (a, c_1..c_t) to an element of Theta given the construction map.
GroupElement ambient_element(const QuotientMap& q, const IntVector& coords) {
  if (coords.size() != q.projection.cols())
    throw DimensionMismatch("Σ_Q override needs " + std::to_string(q.projection.cols()) + " coordinates");
  return q.apply(coords);
}

}  // namespace

SphereData theta_data(int n, const SphereOptions& opts) {
  require_supported_n(n);
  if (n == 11 && !opts.sigma_q)
    throw UnsupportedCase("n = 11: the placement of Σ_Q in Θ_23 is not known here; supply it with --sigma-q");
  SphereData d;
  d.n = n;
  d.coker_j = coker_j(2 * n + 1, opts);
  d.bp = bp_order(2 * n + 2);
  // Theta = Z/bp ⊕ coker J on generators (bp generator, coker J generators).
  const std::size_t c = d.coker_j.num_generators();
  IntMatrix rel(1 + c, 1 + d.coker_j.torsion().size());
  rel(0, 0) = d.bp;
  for (std::size_t t = 0; t < d.coker_j.torsion().size(); ++t) rel(1 + d.coker_j.rank() + t, 1 + t) = d.coker_j.torsion()[t];
  QuotientMap q = from_relations(1 + c, rel);
  d.theta = q.group;
  IntVector e1(1 + c, Int(0));
  e1[0] = 1;
  d.sigma_p = q.apply(e1);
  if (opts.sigma_q) {
    d.sigma_q = ambient_element(q, *opts.sigma_q);
  } else if (n % 4 == 1) {
    d.sigma_q = GroupElement::zero(d.theta);
  } else if (n == 3 || n == 7) {
    d.sigma_q = -d.sigma_p;
  } else {
    d.sigma_q = d.sigma_p.multiple(d.bp / 2);
    d.sigma_q_is_default = true;
  }
  d.bp_generators = {d.sigma_p};
  if (n % 4 == 1)
    d.ba_generators = {d.sigma_p};
  else if (n == 3 || n == 7)
    d.ba_generators = {d.sigma_q};
  else
    d.ba_generators = {d.sigma_p, d.sigma_q};

  Order op = element_order(d.sigma_p);
  if (op.is_infinite() || op.value() != d.bp) throw Error("theta_data: Σ_P does not have order |bP|");
  return d;
}

GroupElement boundary_of_plumbing(const AlmostClosedInvariants& inv, int n, const SphereOptions& opts) {
  require_supported_n(n);
  const bool three_mod_four = n % 4 == 3;
  if (three_mod_four && !inv.chi2) throw InvalidArgument("χ² is required for n ≡ 3 mod 4");
  if (!three_mod_four && inv.chi2) throw InvalidArgument("χ² is only defined for n ≡ 3 mod 4");
  auto divide = [](const Int& value, long by, const std::string& what) {
    if (!mpz_divisible_ui_p(value.get_mpz_t(), by))
      throw DivisibilityError(what + " = " + value.get_str() + " is not divisible by " + std::to_string(by));
    return Int(value / by);
  };
  if (n == 3 || n == 7) {
    Int k = divide(*inv.chi2 - inv.sgn, 8, "χ² - sgn");
    SphereData d = theta_data(n, opts);
    return d.sigma_q.multiple(k);
  }
  Int s = divide(inv.sgn, 8, "sgn");
  if (!three_mod_four) {
    SphereData d = theta_data(n, opts);
    return d.sigma_p.multiple(s);
  }
  Int c = divide(*inv.chi2, 2, "χ²");
  SphereData d = theta_data(n, opts);
  return d.sigma_p.multiple(s) + d.sigma_q.multiple(c);
}

std::string describe_theta_element(const SphereData& data, const GroupElement& x) {
  if (x.is_zero()) return "0";
  if (x == data.sigma_q) return "Σ_Q";
  if (x == data.sigma_p) return "Σ_P";
  if (auto k = discrete_multiple(data.sigma_p, x)) return k->get_str() + "·Σ_P";
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < x.coords().size(); ++i) os << (i ? ", " : "") << x.coords()[i];
  os << ")";
  return os.str();
}

FinAbGroup omega_tau(int n, const SphereOptions& opts) {
  SphereData d = theta_data(n, opts);
  FinAbGroup omega = quotient_by(d.theta, d.ba_generators);
  // Agrees with coker J modulo the image of Σ_Q, as bP lies in bA.
  std::vector<GroupElement> with_bp = d.ba_generators;
  with_bp.push_back(d.sigma_p);
  if (quotient_by(d.theta, with_bp) != omega) throw Error("omega_tau: bP is not contained in bA");
  return omega;
}

Int minimal_signature(int n, const SphereOptions& opts) {
  if (n == 3 || n == 7) return 1;
  SphereData d = theta_data(n, opts);
  QuotientMap q = quotient_map(d.theta, {d.sigma_q});
  Order o = element_order(q.apply(d.sigma_p.coords()));
  return 8 * o.value();
}

}  // namespace hcmcg
