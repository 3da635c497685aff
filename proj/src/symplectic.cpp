#include "hcmcg/symplectic.hpp"

#include "hcmcg/error.hpp"
#include "hcmcg/exact_linear.hpp"

namespace hcmcg {

std::string family_name(GroupFamily f) {
  switch (f) {
    case GroupFamily::Sp: return "Sp";
    case GroupFamily::SpQ: return "SpQ";
    case GroupFamily::Ogg: return "Ogg";
  }
  return "?";
}

GroupFamily parse_family(const std::string& name) {
  if (name == "Sp") return GroupFamily::Sp;
  if (name == "SpQ") return GroupFamily::SpQ;
  if (name == "Ogg") return GroupFamily::Ogg;
  throw InvalidArgument("unknown group family '" + name + "' (expected Sp, SpQ or Ogg)");
}

IntMatrix wall_lambda(std::size_t g, int epsilon) {
  if (epsilon != 1 && epsilon != -1) throw InvalidArgument("epsilon must be +1 or -1");
  IntMatrix j(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    j(i, g + i) = 1;
    j(g + i, i) = epsilon;
  }
  return j;
}

WallForm WallForm::for_dimension(std::size_t g, int n) {
  if (g < 1) throw InvalidArgument("Wall form needs genus >= 1");
  WallForm w;
  w.g = g;
  w.epsilon = (n % 2 == 0) ? 1 : -1;
  w.lambda = wall_lambda(g, w.epsilon);
  if (n % 2 == 0)
    w.q_value_modulus = 0;
  else if (n == 3 || n == 7)
    w.q_value_modulus = 1;
  else
    w.q_value_modulus = 2;
  return w;
}

Int q_eval(const WallForm& form, const IntVector& x) {
  if (x.size() != 2 * form.g) throw DimensionMismatch("q_eval: vector length must be 2g");
  Int s = 0;
  for (std::size_t i = 0; i < form.g; ++i) s += x[i] * x[form.g + i];
  if (form.q_value_modulus == 0) return s;
  return mod_nonneg(s, form.q_value_modulus);
}

namespace {

Int q_mod2(const IntVector& x, std::size_t g) {
  Int s = 0;
  for (std::size_t i = 0; i < g; ++i) s += x[i] * x[g + i];
  return mod_nonneg(s, 2);
}

}  // namespace

bool is_member(GroupFamily family, const IntMatrix& a, std::size_t g) {
  if (a.rows() != 2 * g || a.cols() != 2 * g)
    throw DimensionMismatch("is_member: expected a " + std::to_string(2 * g) + "x" + std::to_string(2 * g) + " matrix");
  const int eps = family == GroupFamily::Ogg ? 1 : -1;
  IntMatrix j = wall_lambda(g, eps);
  if (a.transpose() * j * a != j) return false;
  if (family == GroupFamily::Ogg) {
    // The even form is q(x) = sum x_i y_i over Z; it must be preserved exactly.
    for (std::size_t c = 0; c < 2 * g; ++c) {
      IntVector col = a.column(c);
      Int s = 0;
      for (std::size_t i = 0; i < g; ++i) s += col[i] * col[g + i];
      if (s != 0) return false;
    }
    return true;
  }
  if (family == GroupFamily::SpQ)
    for (std::size_t c = 0; c < 2 * g; ++c)
      if (q_mod2(a.column(c), g) != 0) return false;
  return true;
}

GroupFamily family_for_dimension(int n) {
  if (n % 2 == 0) return GroupFamily::Ogg;
  if (n == 1 || n == 3 || n == 7) return GroupFamily::Sp;
  return GroupFamily::SpQ;
}

namespace {

// diag(P, P) for the transposition (k, k+1) of the handles.
IntMatrix handle_swap(std::size_t g, std::size_t k) {
  IntMatrix m = IntMatrix::identity(2 * g);
  for (std::size_t off : {std::size_t{0}, g}) {
    m(off + k, off + k) = 0;
    m(off + k + 1, off + k + 1) = 0;
    m(off + k, off + k + 1) = 1;
    m(off + k + 1, off + k) = 1;
  }
  return m;
}

// diag(M, M^{-T}) with M = [[1,0],[1,1]] on the first two handles.
IntMatrix handle_shear(std::size_t g) {
  IntMatrix m = IntMatrix::identity(2 * g);
  m(1, 0) = 1;
  m(g, g + 1) = -1;
  return m;
}

// (0, sign*I; I, 0)
IntMatrix block_swap(std::size_t g, int sign) {
  IntMatrix m(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    m(i, g + i) = sign;
    m(g + i, i) = 1;
  }
  return m;
}

}  // namespace

std::vector<IntMatrix> standard_generators(GroupFamily family, std::size_t g) {
  if (g < 1) throw InvalidArgument("standard_generators: genus must be >= 1");
  std::vector<IntMatrix> out;
  if (family == GroupFamily::Ogg) {
    if (g == 1) return {IntMatrix{{-1, 0}, {0, -1}}, IntMatrix{{0, 1}, {1, 0}}};
    for (std::size_t k = 0; k + 1 < g; ++k) out.push_back(handle_swap(g, k));
    out.push_back(block_swap(g, 1));
    out.push_back(handle_shear(g));
    out.push_back(-IntMatrix::identity(2 * g));
    return out;
  }
  if (g == 1) {
    out = {IntMatrix{{1, 2}, {0, 1}}, IntMatrix{{0, 1}, {-1, 0}}};
  } else {
    for (std::size_t k = 0; k + 1 < g; ++k) out.push_back(handle_swap(g, k));
    out.push_back(block_swap(g, -1));
    out.push_back(handle_shear(g));
  }
  if (family == GroupFamily::Sp) {
    IntMatrix t = IntMatrix::identity(2 * g);
    t(0, g) = 1;
    out.push_back(t);
  }
  return out;
}

Int theta_index(std::size_t g) {
  if (g < 1 || g > 6) throw InvalidArgument("theta_index: genus must lie in [1, 6]");
  const std::size_t dim = 2 * g;
  // q_c(e_i) = c_{e_i}, q_c(f_i) = c_{f_i} since q vanishes on the basis.
  Int even = 0;
  for (unsigned long c = 0; c < (1UL << dim); ++c) {
    unsigned arf = 0;
    for (std::size_t i = 0; i < g; ++i) arf ^= ((c >> i) & 1UL) & ((c >> (g + i)) & 1UL);
    if (arf == 0) ++even;
  }
  if (even != theta_index_closed_form(g)) throw Error("theta_index: enumeration disagrees with closed form");
  return even;
}

Int theta_index_closed_form(std::size_t g) {
  Int a, b;
  mpz_ui_pow_ui(a.get_mpz_t(), 2, 2 * g - 1);
  mpz_ui_pow_ui(b.get_mpz_t(), 2, g - 1);
  return a + b;
}

IntMatrix transvection(const IntVector& v) {
  if (v.size() % 2 != 0) throw DimensionMismatch("transvection: vector length must be even");
  const std::size_t d = v.size();
  IntMatrix j = wall_lambda(d / 2, -1);
  IntVector vj(d, Int(0));
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t r = 0; r < d; ++r) vj[c] += v[r] * j(r, c);
  IntMatrix t = IntMatrix::identity(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) t(r, c) += v[r] * vj[c];
  return t;
}

IntMatrix block_diagonal_gl(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("block_diagonal_gl: matrix is not square");
  const std::size_t g = m.rows();
  IntMatrix inv_t = inverse_unimodular(m).transpose();
  IntMatrix out(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      out(i, j) = m(i, j);
      out(g + i, g + j) = inv_t(i, j);
    }
  return out;
}

IntMatrix symplectic_inverse(const IntMatrix& a) {
  if (!a.is_square() || a.rows() % 2 != 0) throw DimensionMismatch("symplectic_inverse: bad shape");
  IntMatrix j = wall_lambda(a.rows() / 2, -1);
  return -(j * a.transpose() * j);
}

}  // namespace hcmcg
