#include "hcmcg/group_cohomology.hpp"

#include <cstdlib>

#include "hcmcg/error.hpp"
#include "hcmcg/exact_linear.hpp"

namespace hcmcg {

void Presentation::validate() const {
  for (const Word& w : relators)
    for (int letter : w)
      if (letter == 0 || static_cast<std::size_t>(std::abs(letter)) > num_generators)
        throw InvalidArgument("relator letter " + std::to_string(letter) + " outside the alphabet of " +
                              std::to_string(num_generators) + " generators");
}

FinAbGroup abelianization(const Presentation& p) {
  p.validate();
  IntMatrix rel(p.num_generators, p.relators.size());
  for (std::size_t j = 0; j < p.relators.size(); ++j)
    for (int letter : p.relators[j]) rel(std::abs(letter) - 1, j) += letter > 0 ? 1 : -1;
  return cokernel_presentation(rel).group;
}

namespace {

IntMatrix reduce(const IntMatrix& a, const Int& modulus) { return modulus == 0 ? a : a.reduced_mod(modulus); }

struct ActionCache {
  std::vector<IntMatrix> fwd, inv;
  Int modulus;

  explicit ActionCache(const GModule& m) : modulus(m.modulus) {
    for (const auto& a : m.action) {
      fwd.push_back(reduce(a, modulus));
      inv.push_back(inverse_mod(a, modulus));
    }
  }
};

void check_shapes(const GModule& m) {
  for (const auto& a : m.action) {
    if (a.rows() != m.dimension || a.cols() != m.dimension)
      throw DimensionMismatch("action matrix is not " + std::to_string(m.dimension) + "x" +
                              std::to_string(m.dimension));
    if (!is_invertible_mod(a, m.modulus))
      throw InvalidArgument("action matrix is not invertible over the coefficient ring");
  }
}

IntMatrix eval_cached(const Word& w, const ActionCache& c, std::size_t dim) {
  IntMatrix u = IntMatrix::identity(dim);
  for (int letter : w) {
    const std::size_t i = std::abs(letter) - 1;
    u = reduce(u * (letter > 0 ? c.fwd[i] : c.inv[i]), c.modulus);
  }
  return u;
}

IntMatrix fox_cached(const Word& w, std::size_t generator, const ActionCache& c, std::size_t dim) {
  IntMatrix u = IntMatrix::identity(dim);
  IntMatrix d(dim, dim);
  for (int letter : w) {
    const std::size_t i = std::abs(letter) - 1;
    if (letter > 0) {
      if (i + 1 == generator) d += u;
      u = reduce(u * c.fwd[i], c.modulus);
    } else {
      IntMatrix step = reduce(u * c.inv[i], c.modulus);
      if (i + 1 == generator) d -= step;
      u = step;
    }
  }
  return reduce(d, c.modulus);
}

}  // namespace

void check_module(const Presentation& p, const GModule& m) {
  p.validate();
  if (m.modulus < 0) throw InvalidArgument("coefficient modulus must be nonnegative");
  if (m.action.size() != p.num_generators)
    throw DimensionMismatch("module has " + std::to_string(m.action.size()) + " action matrices for " +
                            std::to_string(p.num_generators) + " generators");
  check_shapes(m);
  ActionCache c(m);
  IntMatrix id = reduce(IntMatrix::identity(m.dimension), m.modulus);
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    if (eval_cached(p.relators[r], c, m.dimension) != id)
      throw RelatorViolation("action does not satisfy relator " + std::to_string(r + 1));
}

IntMatrix evaluate_word(const Word& w, const GModule& m) {
  check_shapes(m);
  for (int letter : w)
    if (letter == 0 || static_cast<std::size_t>(std::abs(letter)) > m.action.size())
      throw InvalidArgument("word letter " + std::to_string(letter) + " outside the alphabet");
  return eval_cached(w, ActionCache(m), m.dimension);
}

IntMatrix fox_derivative(const Word& w, std::size_t generator, const GModule& m) {
  check_shapes(m);
  if (generator == 0 || generator > m.action.size()) throw InvalidArgument("generator index out of range");
  for (int letter : w)
    if (letter == 0 || static_cast<std::size_t>(std::abs(letter)) > m.action.size())
      throw InvalidArgument("word letter " + std::to_string(letter) + " outside the alphabet");
  return fox_cached(w, generator, ActionCache(m), m.dimension);
}

FinAbGroup h1(const Presentation& p, const GModule& m) {
  check_module(p, m);
  const std::size_t d = m.dimension, k = p.num_generators;
  ActionCache c(m);
  IntMatrix fox(d * p.relators.size(), d * k);
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (std::size_t j = 0; j < k; ++j) {
      IntMatrix f = fox_cached(p.relators[r], j + 1, c, d);
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) fox(r * d + a, j * d + b) = f(a, b);
    }
  IntMatrix z1 = kernel_basis(fox, m.modulus);
  IntMatrix b1(d * k, d);
  for (std::size_t j = 0; j < k; ++j) {
    IntMatrix delta = c.fwd[j] - IntMatrix::identity(d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) b1(j * d + a, b) = delta(a, b);
  }
  if (m.modulus != 0) b1 = b1.hconcat(IntMatrix::identity(d * k) * m.modulus);
  return subquotient(z1, b1);
}

namespace {

void check_square(const std::vector<IntMatrix>& gens, std::size_t dimension) {
  for (const auto& g : gens)
    if (g.rows() != dimension || g.cols() != dimension)
      throw DimensionMismatch("generator is not " + std::to_string(dimension) + "x" + std::to_string(dimension));
}

}  // namespace

FinAbGroup coinvariants(const std::vector<IntMatrix>& gens, std::size_t dimension, const Int& modulus) {
  check_square(gens, dimension);
  IntMatrix rel(dimension, 0);
  for (const auto& g : gens) rel = rel.hconcat(g - IntMatrix::identity(dimension));
  if (modulus != 0) rel = rel.hconcat(IntMatrix::identity(dimension) * modulus);
  return cokernel_presentation(rel).group;
}

FinAbGroup invariants(const std::vector<IntMatrix>& gens, std::size_t dimension, const Int& modulus) {
  check_square(gens, dimension);
  IntMatrix stacked(0, dimension);
  for (const auto& g : gens) stacked = stacked.vconcat(g - IntMatrix::identity(dimension));
  IntMatrix lattice = kernel_basis(stacked, modulus);
  if (modulus == 0) return FinAbGroup::free(lattice.cols());
  return subquotient(lattice, IntMatrix::identity(dimension) * modulus);
}

FinAbGroup coinvariants(const std::vector<IntMatrix>& gens, std::size_t dimension, const FinAbGroup& a) {
  std::vector<FinAbGroup> parts;
  for (std::size_t i = 0; i < a.num_generators(); ++i)
    parts.push_back(coinvariants(gens, dimension, a.generator_order(i)));
  return direct_sum(parts);
}

FinAbGroup invariants(const std::vector<IntMatrix>& gens, std::size_t dimension, const FinAbGroup& a) {
  std::vector<FinAbGroup> parts;
  for (std::size_t i = 0; i < a.num_generators(); ++i)
    parts.push_back(invariants(gens, dimension, a.generator_order(i)));
  return direct_sum(parts);
}

GModule MatrixPresentation::standard_module(const Int& modulus) const {
  GModule m;
  m.dimension = matrices.empty() ? 0 : matrices.front().rows();
  m.modulus = modulus;
  for (const auto& a : matrices) m.action.push_back(reduce(a, modulus));
  return m;
}

namespace {

const IntMatrix kS{{0, -1}, {1, 0}};
const IntMatrix kT{{0, -1}, {1, 1}};
const IntMatrix kR{{1, 2}, {0, 1}};

MatrixPresentation checked(MatrixPresentation mp, const Int& modulus) {
  check_module(mp.presentation, mp.standard_module(modulus));
  return mp;
}

}  // namespace

MatrixPresentation sl2_presentation() {
  return checked({{2, {{1, 1, 1, 1}, {1, 1, -2, -2, -2}}}, {kS, kT}}, 0);
}

MatrixPresentation sp2q_presentation() {
  return checked({{2, {{1, 1, 1, 1}, {1, 1, 2, -1, -1, -2}}}, {kS, kR}}, 0);
}

MatrixPresentation psp2_presentation() { return checked({{2, {{1, 1}, {2, 2, 2}}}, {kS, kT}}, 2); }

MatrixPresentation psp2q_presentation() { return checked({{2, {{1, 1}}}, {kS, kR}}, 2); }

}  // namespace hcmcg
