#pragma once

#include <string>
#include <vector>

#include "hcmcg/matrix.hpp"

namespace hcmcg {

enum class GroupFamily { Sp, SpQ, Ogg };

std::string family_name(GroupFamily f);
GroupFamily parse_family(const std::string& name);

// Block matrix (0 I; eps*I 0) in the basis (e_1..e_g, f_1..f_g).
IntMatrix wall_lambda(std::size_t g, int epsilon);

// (H(g), lambda, q) for W_g = #^g(S^n x S^n).
struct WallForm {
  std::size_t g = 1;
  int epsilon = -1;
  IntMatrix lambda;
  // Value group of q: 0 means Z (n even), 2 means Z/2, 1 means the trivial group.
  int q_value_modulus = 2;

  static WallForm for_dimension(std::size_t g, int n);
};

// q(x) = sum_i x_{e_i} x_{f_i}, reduced into the value group.
Int q_eval(const WallForm& form, const IntVector& x);

bool is_member(GroupFamily family, const IntMatrix& a, std::size_t g);

std::vector<IntMatrix> standard_generators(GroupFamily family, std::size_t g);

// The group G_g acting on H(g) for odd or even n.
GroupFamily family_for_dimension(int n);

// Number of even theta characteristics, by enumeration over F_2^{2g} (1 <= g <= 6).
Int theta_index(std::size_t g);
Int theta_index_closed_form(std::size_t g);

// x -> x + lambda(v, x) v for the skew form.
IntMatrix transvection(const IntVector& v);
// diag(M, M^{-T}) for M in GL_g(Z).
IntMatrix block_diagonal_gl(const IntMatrix& m);

// Inverse of a symplectic matrix: -J A^T J.
IntMatrix symplectic_inverse(const IntMatrix& a);

}  // namespace hcmcg
