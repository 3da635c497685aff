#pragma once

#include <optional>
#include <vector>

#include "hcmcg/abgroup.hpp"
#include "hcmcg/matrix.hpp"

namespace hcmcg {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct SNFResult {
  IntMatrix U, D, V;
  // Inverses of U and V, maintained alongside the elimination.
  IntMatrix U_inv, V_inv;
  std::size_t rank = 0;

  // The nonzero diagonal entries d_1 | d_2 | ... (length == rank).
  IntVector invariants() const;
};

SNFResult snf(const IntMatrix& m);

// Columns form a Z-basis of {x : Mx = 0}. With a positive modulus they form a
// Z-basis of the lattice {x : Mx ≡ 0 mod m}, which contains m·Z^cols; reduced
// mod m this spans the kernel over Z/m.
IntMatrix kernel_basis(const IntMatrix& m, const Int& modulus = 0);

// A Z-basis (as columns) of the column span of M.
IntMatrix column_span_basis(const IntMatrix& m);

// Some integer x with Mx = v, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& v);

// Z^rows / column-span(M), with the projection sending a vector of Z^rows to
// its canonical coordinates.
QuotientMap cokernel_presentation(const IntMatrix& m);

// L / span(gens), where the columns of `lattice` are linearly independent and
// every column of `gens` lies in their span. Throws InvalidArgument otherwise.
FinAbGroup subquotient(const IntMatrix& lattice, const IntMatrix& gens);

Int determinant(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);

// Inverse of a matrix with determinant ±1; throws InvalidArgument otherwise.
IntMatrix inverse_unimodular(const IntMatrix& m);
// Inverse modulo m (0 means over Z); throws InvalidArgument when det is not a unit.
IntMatrix inverse_mod(const IntMatrix& a, const Int& modulus);
bool is_invertible_mod(const IntMatrix& a, const Int& modulus);

RationalMatrix to_rational(const IntMatrix& m);

// Signature of a symmetric rational matrix by congruence diagonalization.
int exact_signature(const RationalMatrix& s);
int exact_signature(const IntMatrix& s);

}  // namespace hcmcg
