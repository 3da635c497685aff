#include "hcmcg/exact_linear.hpp"

#include <utility>

#include "hcmcg/error.hpp"

namespace hcmcg {

namespace {

// Elimination state. Every row operation is applied to D and U (and inversely
// to U_inv); every column operation to D and V (and inversely to V_inv).
struct Eliminator {
  IntMatrix D, U, U_inv, V, V_inv;

  explicit Eliminator(const IntMatrix& m)
      : D(m),
        U(IntMatrix::identity(m.rows())),
        U_inv(IntMatrix::identity(m.rows())),
        V(IntMatrix::identity(m.cols())),
        V_inv(IntMatrix::identity(m.cols())) {}

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < D.cols(); ++c) std::swap(D(i, c), D(j, c));
    for (std::size_t c = 0; c < U.cols(); ++c) std::swap(U(i, c), U(j, c));
    for (std::size_t r = 0; r < U_inv.rows(); ++r) std::swap(U_inv(r, i), U_inv(r, j));
  }

  // row_i += k * row_j
  void add_row(std::size_t i, std::size_t j, const Int& k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < D.cols(); ++c) D(i, c) += k * D(j, c);
    for (std::size_t c = 0; c < U.cols(); ++c) U(i, c) += k * U(j, c);
    for (std::size_t r = 0; r < U_inv.rows(); ++r) U_inv(r, j) -= k * U_inv(r, i);
  }

  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < D.cols(); ++c) D(i, c) = -D(i, c);
    for (std::size_t c = 0; c < U.cols(); ++c) U(i, c) = -U(i, c);
    for (std::size_t r = 0; r < U_inv.rows(); ++r) U_inv(r, i) = -U_inv(r, i);
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < D.rows(); ++r) std::swap(D(r, i), D(r, j));
    for (std::size_t r = 0; r < V.rows(); ++r) std::swap(V(r, i), V(r, j));
    for (std::size_t c = 0; c < V_inv.cols(); ++c) std::swap(V_inv(i, c), V_inv(j, c));
  }

  // col_j += k * col_i
  void add_col(std::size_t j, std::size_t i, const Int& k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < D.rows(); ++r) D(r, j) += k * D(r, i);
    for (std::size_t r = 0; r < V.rows(); ++r) V(r, j) += k * V(r, i);
    for (std::size_t c = 0; c < V_inv.cols(); ++c) V_inv(i, c) -= k * V_inv(j, c);
  }

  // Moves the smallest nonzero |entry| of the trailing block at t to (t,t).
  bool move_pivot(std::size_t t) {
    bool found = false;
    std::size_t bi = t, bj = t;
    Int best;
    for (std::size_t i = t; i < D.rows(); ++i)
      for (std::size_t j = t; j < D.cols(); ++j) {
        if (D(i, j) == 0) continue;
        Int a = abs(D(i, j));
        if (!found || a < best) {
          found = true;
          best = a;
          bi = i;
          bj = j;
        }
      }
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  // Clears row t and column t outside the pivot. Returns false if a nonzero
  // remainder forced a pivot change (the caller retries).
  bool clear_cross(std::size_t t) {
    const Int p = D(t, t);
    bool clean = true;
    for (std::size_t i = t + 1; i < D.rows(); ++i) {
      if (D(i, t) == 0) continue;
      Int q;
      mpz_tdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), p.get_mpz_t());
      add_row(i, t, -q);
      if (D(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < D.cols(); ++j) {
      if (D(t, j) == 0) continue;
      Int q;
      mpz_tdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), p.get_mpz_t());
      add_col(j, t, -q);
      if (D(t, j) != 0) clean = false;
    }
    return clean;
  }
};

}  // namespace

IntVector SNFResult::invariants() const {
  IntVector out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(D(i, i));
  return out;
}

SNFResult snf(const IntMatrix& m) {
  Eliminator e(m);
  const std::size_t limit = std::min(m.rows(), m.cols());
  std::size_t t = 0;
  for (; t < limit; ++t) {
    if (!e.move_pivot(t)) break;
    for (;;) {
      if (!e.clear_cross(t)) {
        e.move_pivot(t);
        continue;
      }
      // The pivot must divide the whole trailing block.
      bool fixed = false;
      for (std::size_t i = t + 1; i < m.rows() && !fixed; ++i)
        for (std::size_t j = t + 1; j < m.cols(); ++j) {
          Int r;
          mpz_tdiv_r(r.get_mpz_t(), e.D(i, j).get_mpz_t(), e.D(t, t).get_mpz_t());
          if (r != 0) {
            e.add_row(t, i, 1);
            fixed = true;
            break;
          }
        }
      if (!fixed) break;
    }
    if (e.D(t, t) < 0) e.negate_row(t);
  }
  SNFResult out;
  out.D = std::move(e.D);
  out.U = std::move(e.U);
  out.U_inv = std::move(e.U_inv);
  out.V = std::move(e.V);
  out.V_inv = std::move(e.V_inv);
  out.rank = t;
  return out;
}

IntMatrix kernel_basis(const IntMatrix& m, const Int& modulus) {
  if (modulus < 0) throw InvalidArgument("kernel_basis: modulus must be nonnegative");
  if (modulus == 0) {
    SNFResult s = snf(m);
    return s.V.column_block(s.rank, m.cols() - s.rank);
  }
  IntMatrix ext = m.hconcat(IntMatrix::identity(m.rows()) * modulus);
  SNFResult s = snf(ext);
  IntMatrix k = s.V.column_block(s.rank, ext.cols() - s.rank);
  return k.row_block(0, m.cols());
}

IntMatrix column_span_basis(const IntMatrix& m) {
  SNFResult s = snf(m);
  IntMatrix out(m.rows(), s.rank);
  for (std::size_t j = 0; j < s.rank; ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, j) = s.U_inv(i, j) * s.D(j, j);
  return out;
}

std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& v) {
  if (v.size() != m.rows()) throw DimensionMismatch("solve_integer: right-hand side has wrong length");
  SNFResult s = snf(m);
  IntVector uv = s.U * v;
  IntVector y(m.cols(), Int(0));
  for (std::size_t i = 0; i < uv.size(); ++i) {
    if (i < s.rank) {
      if (!mpz_divisible_p(uv[i].get_mpz_t(), s.D(i, i).get_mpz_t())) return std::nullopt;
      y[i] = uv[i] / s.D(i, i);
    } else if (uv[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V * y;
}

QuotientMap cokernel_presentation(const IntMatrix& m) {
  SNFResult s = snf(m);
  std::vector<std::size_t> torsion_rows;
  std::vector<Int> torsion;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.D(i, i) != 1) {
      torsion_rows.push_back(i);
      torsion.push_back(s.D(i, i));
    }
  const std::size_t free_rank = m.rows() - s.rank;
  QuotientMap out;
  out.group = FinAbGroup::from_invariants(free_rank, torsion);
  out.projection = IntMatrix(free_rank + torsion_rows.size(), m.rows());
  std::size_t r = 0;
  for (std::size_t i = s.rank; i < m.rows(); ++i, ++r)
    for (std::size_t c = 0; c < m.rows(); ++c) out.projection(r, c) = s.U(i, c);
  for (std::size_t i : torsion_rows) {
    for (std::size_t c = 0; c < m.rows(); ++c) out.projection(r, c) = mod_nonneg(s.U(i, c), s.D(i, i));
    ++r;
  }
  return out;
}

FinAbGroup subquotient(const IntMatrix& lattice, const IntMatrix& gens) {
  if (gens.rows() != lattice.rows()) throw DimensionMismatch("subquotient: ambient dimensions differ");
  SNFResult s = snf(lattice);
  if (s.rank != lattice.cols()) throw InvalidArgument("subquotient: lattice basis is not independent");
  IntMatrix coords(lattice.cols(), gens.cols());
  for (std::size_t j = 0; j < gens.cols(); ++j) {
    IntVector uv = s.U * gens.column(j);
    IntVector y(lattice.cols(), Int(0));
    for (std::size_t i = 0; i < uv.size(); ++i) {
      if (i < s.rank) {
        if (!mpz_divisible_p(uv[i].get_mpz_t(), s.D(i, i).get_mpz_t()))
          throw InvalidArgument("subquotient: generator outside the lattice");
        y[i] = uv[i] / s.D(i, i);
      } else if (uv[i] != 0) {
        throw InvalidArgument("subquotient: generator outside the lattice");
      }
    }
    IntVector c = s.V * y;
    for (std::size_t i = 0; i < c.size(); ++i) coords(i, j) = c[i];
  }
  return cokernel_presentation(coords).group;
}

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = Rational(m(i, j));
  return out;
}

Int determinant(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) { return snf(m).rank; }

IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse_unimodular: matrix is not square");
  SNFResult s = snf(m);
  if (s.rank != m.rows()) throw InvalidArgument("inverse_unimodular: matrix is singular");
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.D(i, i) != 1) throw InvalidArgument("inverse_unimodular: determinant is not a unit");
  // U M V = I, so M^{-1} = V U.
  return s.V * s.U;
}

IntMatrix inverse_mod(const IntMatrix& a, const Int& modulus) {
  if (modulus == 0) return inverse_unimodular(a);
  if (!a.is_square()) throw DimensionMismatch("inverse_mod: matrix is not square");
  const std::size_t n = a.rows();
  Int det = determinant(a);
  Int det_inv;
  Int dm = mod_nonneg(det, modulus);
  if (mpz_invert(det_inv.get_mpz_t(), dm.get_mpz_t(), modulus.get_mpz_t()) == 0) {
    if (modulus != 1) throw InvalidArgument("inverse_mod: determinant is not a unit");
    return IntMatrix(n, n);
  }
  // adj(a) = det * a^{-1}, computed over Q by Gauss-Jordan.
  RationalMatrix aug(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rational(a(i, j));
    aug[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (aug[p][c] == 0) ++p;
    std::swap(aug[p], aug[c]);
    Rational piv = aug[c][c];
    for (auto& x : aug[c]) x /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || aug[r][c] == 0) continue;
      Rational f = aug[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) aug[r][k] -= f * aug[c][k];
    }
  }
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational adj = aug[i][n + j] * Rational(det);
      adj.canonicalize();
      out(i, j) = mod_nonneg(adj.get_num() * det_inv, modulus);
    }
  return out;
}

bool is_invertible_mod(const IntMatrix& a, const Int& modulus) {
  if (!a.is_square()) return false;
  Int det = determinant(a);
  if (modulus == 0) return det == 1 || det == -1;
  Int g;
  Int dm = mod_nonneg(det, modulus);
  mpz_gcd(g.get_mpz_t(), dm.get_mpz_t(), modulus.get_mpz_t());
  return g == 1;
}

int exact_signature(const RationalMatrix& s_in) {
  const std::size_t n = s_in.size();
  for (const auto& row : s_in)
    if (row.size() != n) throw DimensionMismatch("exact_signature: matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (s_in[i][j] != s_in[j][i]) throw InvalidArgument("exact_signature: matrix is not symmetric");

  RationalMatrix s = s_in;
  std::vector<bool> alive(n, true);
  int sig = 0;
  for (;;) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n && piv == n; ++i)
      if (alive[i] && s[i][i] != 0) piv = i;
    if (piv != n) {
      const Rational d = s[piv][piv];
      sig += sgn(d) > 0 ? 1 : -1;
      alive[piv] = false;
      for (std::size_t p = 0; p < n; ++p) {
        if (!alive[p] || s[p][piv] == 0) continue;
        const Rational f = s[p][piv] / d;
        for (std::size_t q = 0; q < n; ++q)
          if (alive[q]) s[p][q] -= f * s[piv][q];
      }
      continue;
    }
    std::size_t pi = n, pj = n;
    for (std::size_t i = 0; i < n && pi == n; ++i) {
      if (!alive[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j)
        if (alive[j] && s[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
    }
    if (pi == n) break;
    // Hyperbolic block [[0,b],[b,0]] contributes +1 and -1.
    const Rational b = s[pi][pj];
    alive[pi] = alive[pj] = false;
    std::vector<Rational> ci(n), cj(n);
    for (std::size_t p = 0; p < n; ++p) {
      ci[p] = s[p][pi];
      cj[p] = s[p][pj];
    }
    for (std::size_t p = 0; p < n; ++p) {
      if (!alive[p]) continue;
      for (std::size_t q = 0; q < n; ++q)
        if (alive[q]) s[p][q] -= (ci[p] * cj[q] + cj[p] * ci[q]) / b;
    }
  }
  return sig;
}

int exact_signature(const IntMatrix& s) { return exact_signature(to_rational(s)); }

}  // namespace hcmcg
