#include "hcmcg/abgroup.hpp"

#include <sstream>

#include "hcmcg/error.hpp"
#include "hcmcg/exact_linear.hpp"

namespace hcmcg {

FinAbGroup FinAbGroup::from_cyclic_orders(const std::vector<Int>& orders) {
  std::size_t rank = 0;
  std::vector<Int> finite;
  for (const Int& d : orders) {
    if (d < 0) throw InvalidArgument("cyclic order must be nonnegative");
    if (d == 0)
      ++rank;
    else if (d != 1)
      finite.push_back(d);
  }
  if (finite.empty()) {
    FinAbGroup g;
    g.rank_ = rank;
    return g;
  }
  // Normalize the finite part through SNF of the diagonal relation matrix.
  SNFResult s = snf(IntMatrix::diagonal(finite));
  FinAbGroup g;
  g.rank_ = rank;
  for (const Int& d : s.invariants())
    if (d != 1) g.torsion_.push_back(d);
  return g;
}

FinAbGroup FinAbGroup::from_invariants(std::size_t rank, const std::vector<Int>& torsion) {
  bool canonical = true;
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (torsion[i] < 2) canonical = false;
    if (i + 1 < torsion.size() && !mpz_divisible_p(torsion[i + 1].get_mpz_t(), torsion[i].get_mpz_t()))
      canonical = false;
  }
  if (!canonical) {
    std::vector<Int> orders(rank, Int(0));
    orders.insert(orders.end(), torsion.begin(), torsion.end());
    return from_cyclic_orders(orders);
  }
  FinAbGroup g;
  g.rank_ = rank;
  g.torsion_ = torsion;
  return g;
}

Int FinAbGroup::generator_order(std::size_t i) const {
  if (i < rank_) return 0;
  if (i - rank_ < torsion_.size()) return torsion_[i - rank_];
  throw InvalidArgument("generator index out of range");
}

std::optional<Int> FinAbGroup::order() const {
  if (rank_ > 0) return std::nullopt;
  Int o = 1;
  for (const Int& d : torsion_) o *= d;
  return o;
}

std::optional<Int> FinAbGroup::exponent() const {
  if (rank_ > 0) return std::nullopt;
  return torsion_.empty() ? Int(1) : torsion_.back();
}

std::string FinAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::vector<std::string> parts;
  std::size_t i = 0;
  while (i < torsion_.size()) {
    std::size_t j = i;
    while (j < torsion_.size() && torsion_[j] == torsion_[i]) ++j;
    std::string base = "Z/" + torsion_[i].get_str();
    if (j - i == 1)
      parts.push_back(base);
    else
      parts.push_back("(" + base + ")^" + std::to_string(j - i));
    i = j;
  }
  if (rank_ == 1)
    parts.push_back("Z");
  else if (rank_ > 1)
    parts.push_back("Z^" + std::to_string(rank_));
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += " ⊕ ";
    out += parts[k];
  }
  return out;
}

const Int& Order::value() const {
  if (!value_) throw InvalidArgument("element has infinite order");
  return *value_;
}

std::string Order::to_string() const { return value_ ? value_->get_str() : "infinity"; }

GroupElement::GroupElement(FinAbGroup owner, IntVector coords) : owner_(std::move(owner)), coords_(std::move(coords)) {
  if (coords_.size() != owner_.num_generators())
    throw DimensionMismatch("group element has " + std::to_string(coords_.size()) + " coordinates, expected " +
                            std::to_string(owner_.num_generators()));
  for (std::size_t i = owner_.rank(); i < coords_.size(); ++i)
    coords_[i] = mod_nonneg(coords_[i], owner_.generator_order(i));
}

GroupElement GroupElement::zero(const FinAbGroup& owner) {
  return GroupElement(owner, IntVector(owner.num_generators(), Int(0)));
}

GroupElement GroupElement::generator(const FinAbGroup& owner, std::size_t i) {
  IntVector c(owner.num_generators(), Int(0));
  if (i >= c.size()) throw InvalidArgument("generator index out of range");
  c[i] = 1;
  return GroupElement(owner, c);
}

bool GroupElement::is_zero() const { return hcmcg::is_zero(coords_); }

void GroupElement::check_same_owner(const GroupElement& other) const {
  if (owner_ != other.owner_) throw InvalidArgument("elements belong to different groups");
}

GroupElement GroupElement::operator+(const GroupElement& other) const {
  check_same_owner(other);
  return GroupElement(owner_, add(coords_, other.coords_));
}

GroupElement GroupElement::operator-(const GroupElement& other) const {
  check_same_owner(other);
  return GroupElement(owner_, sub(coords_, other.coords_));
}

GroupElement GroupElement::operator-() const { return multiple(-1); }

GroupElement GroupElement::multiple(const Int& k) const { return GroupElement(owner_, scaled(coords_, k)); }

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? ", " : "") << coords_[i];
  os << ") in " << owner_.to_string();
  return os.str();
}

GroupElement QuotientMap::apply(const IntVector& v) const { return GroupElement(group, projection * v); }

QuotientMap from_relations(std::size_t ambient_rank, const IntMatrix& relations) {
  if (relations.rows() != ambient_rank && !(relations.cols() == 0 && relations.rows() == 0))
    throw DimensionMismatch("relations have " + std::to_string(relations.rows()) + " rows, expected " +
                            std::to_string(ambient_rank));
  if (relations.rows() != ambient_rank) return cokernel_presentation(IntMatrix(ambient_rank, 0));
  return cokernel_presentation(relations);
}

namespace {

// Relation matrix presenting G on its canonical generators, with extra columns.
IntMatrix presentation_with(const FinAbGroup& g, const std::vector<GroupElement>& gens) {
  const std::size_t k = g.num_generators();
  IntMatrix rel(k, g.torsion().size() + gens.size());
  for (std::size_t t = 0; t < g.torsion().size(); ++t) rel(g.rank() + t, t) = g.torsion()[t];
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].owner() != g) throw InvalidArgument("element does not belong to " + g.to_string());
    for (std::size_t i = 0; i < k; ++i) rel(i, g.torsion().size() + j) = gens[j].coords()[i];
  }
  return rel;
}

}  // namespace

QuotientMap quotient_map(const FinAbGroup& g, const std::vector<GroupElement>& gens) {
  return cokernel_presentation(presentation_with(g, gens));
}

FinAbGroup quotient_by(const FinAbGroup& g, const std::vector<GroupElement>& gens) {
  return quotient_map(g, gens).group;
}

FinAbGroup direct_sum(const std::vector<FinAbGroup>& summands) {
  std::vector<Int> orders;
  for (const auto& s : summands) {
    for (std::size_t i = 0; i < s.rank(); ++i) orders.push_back(0);
    orders.insert(orders.end(), s.torsion().begin(), s.torsion().end());
  }
  return FinAbGroup::from_cyclic_orders(orders);
}

FinAbGroup direct_power(const FinAbGroup& g, std::size_t k) {
  return direct_sum(std::vector<FinAbGroup>(k, g));
}

FinAbGroup mod_multiples(const FinAbGroup& g, const Int& k) {
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < g.num_generators(); ++i) gens.push_back(GroupElement::generator(g, i).multiple(k));
  return quotient_by(g, gens);
}

Order element_order(const GroupElement& x) {
  const FinAbGroup& g = x.owner();
  for (std::size_t i = 0; i < g.rank(); ++i)
    if (x.coords()[i] != 0) return Order::infinite();
  Int o = 1;
  for (std::size_t t = 0; t < g.torsion().size(); ++t) {
    const Int& d = g.torsion()[t];
    const Int& c = x.coords()[g.rank() + t];
    Int gg;
    mpz_gcd(gg.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    Int ord = d / gg;
    mpz_lcm(o.get_mpz_t(), o.get_mpz_t(), ord.get_mpz_t());
  }
  return Order::finite(o);
}

FinAbGroup subgroup_generated(const FinAbGroup& g, const std::vector<GroupElement>& gens) {
  // <gens> = (lift of gens + relations of G) / relations of G, inside Z^k.
  const std::size_t k = g.num_generators();
  IntMatrix relations(k, g.torsion().size());
  for (std::size_t t = 0; t < g.torsion().size(); ++t) relations(g.rank() + t, t) = g.torsion()[t];
  IntMatrix lifted = presentation_with(g, gens);
  IntMatrix lattice = column_span_basis(lifted);
  return subquotient(lattice, relations);
}

std::optional<Int> discrete_multiple(const GroupElement& base, const GroupElement& x) {
  if (base.owner() != x.owner()) throw InvalidArgument("elements belong to different groups");
  Order o = element_order(base);
  if (o.is_infinite()) return std::nullopt;
  GroupElement acc = GroupElement::zero(base.owner());
  for (Int k = 0; k < o.value(); ++k) {
    if (acc == x) return k;
    acc = acc + base;
  }
  return std::nullopt;
}

}  // namespace hcmcg
