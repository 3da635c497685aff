#pragma once

#include <vector>

#include "hcmcg/abgroup.hpp"
#include "hcmcg/matrix.hpp"

namespace hcmcg {

// A word in the generators: +i means x_i, -i means x_i^{-1} (1-based).
using Word = std::vector<int>;

struct Presentation {
  std::size_t num_generators = 0;
  std::vector<Word> relators;

  // Throws InvalidArgument for a letter 0 or out of range.
  void validate() const;
};

// Z^dimension or (Z/modulus)^dimension with one action matrix per generator.
struct GModule {
  std::size_t dimension = 0;
  Int modulus = 0;
  std::vector<IntMatrix> action;
};

// Checks shapes, invertibility over the coefficient ring and every relator.
void check_module(const Presentation& p, const GModule& m);

FinAbGroup abelianization(const Presentation& p);

// rho(word), reduced mod the coefficient modulus.
IntMatrix evaluate_word(const Word& w, const GModule& m);

// Fox derivative d(word)/d(x_generator) under rho; generator is 1-based.
IntMatrix fox_derivative(const Word& w, std::size_t generator, const GModule& m);

// Crossed homomorphisms modulo principal ones.
FinAbGroup h1(const Presentation& p, const GModule& m);

// (A^dim)_G and (A^dim)^G for A = Z/modulus (0 = Z) under the given matrices.
FinAbGroup coinvariants(const std::vector<IntMatrix>& gens, std::size_t dimension, const Int& modulus);
FinAbGroup invariants(const std::vector<IntMatrix>& gens, std::size_t dimension, const Int& modulus);
// Same with A an arbitrary finitely generated abelian group (summand-wise).
FinAbGroup coinvariants(const std::vector<IntMatrix>& gens, std::size_t dimension, const FinAbGroup& a);
FinAbGroup invariants(const std::vector<IntMatrix>& gens, std::size_t dimension, const FinAbGroup& a);

// Presentations of low-rank arithmetic groups together with the matrices that
// realize their generators.
struct MatrixPresentation {
  Presentation presentation;
  std::vector<IntMatrix> matrices;

  // The standard module Z^2 (modulus 0) or its reduction mod `modulus`.
  GModule standard_module(const Int& modulus = 0) const;
};

MatrixPresentation sl2_presentation();     // <a,b | a^4, a^2 b^-3>, a = S, b = T
MatrixPresentation sp2q_presentation();    // <a,r | a^4, [a^2,r]>, a = S, r = R
MatrixPresentation psp2_presentation();    // <S,T | S^2, T^3>
MatrixPresentation psp2q_presentation();   // <S,R | S^2>

}  // namespace hcmcg
