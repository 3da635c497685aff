#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hcmcg/matrix.hpp"

namespace hcmcg {

// Finitely generated abelian group Z^rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_t in invariant-factor
// form: every d_i >= 2 and d_i | d_{i+1}. The representation is canonical, so
// operator== is isomorphism.
class FinAbGroup {
 public:
  FinAbGroup() = default;  // trivial group

  // Any list of cyclic orders (0 = infinite cyclic, 1 = trivial) is normalized.
  static FinAbGroup from_cyclic_orders(const std::vector<Int>& orders);
  static FinAbGroup from_invariants(std::size_t rank, const std::vector<Int>& torsion);
  static FinAbGroup free(std::size_t rank) { return from_invariants(rank, {}); }
  static FinAbGroup cyclic(const Int& order) { return from_cyclic_orders({order}); }
  static FinAbGroup trivial() { return {}; }

  std::size_t rank() const { return rank_; }
  const std::vector<Int>& torsion() const { return torsion_; }
  // Number of canonical generators: one per Z-summand, then one per torsion factor.
  std::size_t num_generators() const { return rank_ + torsion_.size(); }
  // Cyclic order of canonical generator i (0 for a free generator).
  Int generator_order(std::size_t i) const;

  bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }
  bool is_finite() const { return rank_ == 0; }
  // |G| for finite groups, nullopt otherwise.
  std::optional<Int> order() const;
  // Largest invariant factor for finite groups (1 for trivial), nullopt otherwise.
  std::optional<Int> exponent() const;

  // Text form such as "Z/2 ⊕ Z/8128", "Z^4", "0".
  std::string to_string() const;

  friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) {
    return a.rank_ == b.rank_ && a.torsion_ == b.torsion_;
  }
  friend bool operator!=(const FinAbGroup& a, const FinAbGroup& b) { return !(a == b); }

 private:
  std::size_t rank_ = 0;
  std::vector<Int> torsion_;
};

// Order of a group element: a positive integer or the infinite marker.
class Order {
 public:
  static Order infinite() { return Order(); }
  static Order finite(Int k) { return Order(std::move(k)); }

  bool is_infinite() const { return !value_.has_value(); }
  const Int& value() const;  // throws for infinite order

  friend bool operator==(const Order& a, const Order& b) { return a.value_ == b.value_; }
  std::string to_string() const;

 private:
  Order() = default;
  explicit Order(Int k) : value_(std::move(k)) {}
  std::optional<Int> value_;
};

// Element of a FinAbGroup in canonical coordinates; torsion coordinates are
// kept reduced into [0, d_i).
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(FinAbGroup owner, IntVector coords);

  static GroupElement zero(const FinAbGroup& owner);
  // Canonical generator number i.
  static GroupElement generator(const FinAbGroup& owner, std::size_t i);

  const FinAbGroup& owner() const { return owner_; }
  const IntVector& coords() const { return coords_; }
  bool is_zero() const;

  GroupElement operator+(const GroupElement& other) const;
  GroupElement operator-(const GroupElement& other) const;
  GroupElement operator-() const;
  GroupElement multiple(const Int& k) const;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.owner_ == b.owner_ && a.coords_ == b.coords_;
  }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void check_same_owner(const GroupElement& other) const;
  FinAbGroup owner_;
  IntVector coords_;
};

// A quotient Z^ambient -> G together with the coordinate map. The projection
// matrix has one row per canonical generator of G; torsion rows are reduced
// when applied.
struct QuotientMap {
  FinAbGroup group;
  IntMatrix projection;

  GroupElement apply(const IntVector& v) const;
};

// Z^ambient_rank modulo the column span of `relations`.
QuotientMap from_relations(std::size_t ambient_rank, const IntMatrix& relations);

// G / <gens>. Throws InvalidArgument if an element belongs to another group.
FinAbGroup quotient_by(const FinAbGroup& g, const std::vector<GroupElement>& gens);
// Same, but also returns the map from coordinates of G to coordinates of the quotient.
QuotientMap quotient_map(const FinAbGroup& g, const std::vector<GroupElement>& gens);

FinAbGroup direct_sum(const std::vector<FinAbGroup>& summands);
// G^k, e.g. Z^{2g} ⊗ A = A^{2g}.
FinAbGroup direct_power(const FinAbGroup& g, std::size_t k);
// G / kG.
FinAbGroup mod_multiples(const FinAbGroup& g, const Int& k);

Order element_order(const GroupElement& x);

// Isomorphism type of the subgroup generated by `gens`.
FinAbGroup subgroup_generated(const FinAbGroup& g, const std::vector<GroupElement>& gens);

// Smallest k >= 0 with k*base == x, if x lies in the cyclic subgroup <base>
// and that subgroup is finite.
std::optional<Int> discrete_multiple(const GroupElement& base, const GroupElement& x);

}  // namespace hcmcg
