#pragma once

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "hcmcg/group_cohomology.hpp"
#include "hcmcg/matrix.hpp"

namespace hcmcg {

using MatrixPair = std::pair<IntMatrix, IntMatrix>;
using VectorPair = std::pair<IntVector, IntVector>;

// Holonomies (A_i, B_i) of a genus-h surface in Sp_2g(Z) with prod [A_i,B_i] = I.
struct SurfaceClass {
  std::size_t g = 1;
  std::vector<MatrixPair> pairs;

  std::size_t h() const { return pairs.size(); }
  // Throws InvalidArgument / RelatorViolation.
  void validate() const;
};

// A SurfaceClass lifted to Z^2g ⋊ Sp_2g(Z) by translations (v_i, w_i).
struct AffineSurfaceClass {
  SurfaceClass base;
  std::vector<VectorPair> translations;

  void validate() const;
  static AffineSurfaceClass untranslated(const SurfaceClass& c);
};

// (v, A) acting by x -> Ax + v; (v,A)(w,B) = (v + Aw, AB).
struct AffineElement {
  IntVector v;
  IntMatrix a;

  static AffineElement identity(std::size_t dim);
  AffineElement operator*(const AffineElement& o) const;
  AffineElement inverse() const;
  friend bool operator==(const AffineElement& x, const AffineElement& y) { return x.a == y.a && x.v == y.v; }
  friend bool operator<(const AffineElement& x, const AffineElement& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.v < y.v;
  }
};

struct BarTerm {
  AffineElement a, b;
  Int coeff;
};

struct BarTwoCycle {
  std::vector<BarTerm> terms;

  // True when sum coeff * ([b] - [ab] + [a]) vanishes as a formal 1-chain.
  bool boundary_vanishes() const;
};

int meyer_tau(const IntMatrix& a, const IntMatrix& b);

BarTwoCycle surface_two_cycle(const SurfaceClass& cls);
BarTwoCycle surface_two_cycle(const AffineSurfaceClass& cls);

Int signature_of_class(const SurfaceClass& cls);
Int chi2_of_class(const AffineSurfaceClass& cls);

enum class DividedClass { SgnOver8, Chi2Over2, Chi2MinusSgnOver8 };

DividedClass parse_divided_class(const std::string& name);
std::string divided_class_name(DividedClass which);

// Only sgn/8 is meaningful without translations.
Int divided_eval(DividedClass which, const SurfaceClass& cls);
Int divided_eval(DividedClass which, const AffineSurfaceClass& cls);

// Valid classes from seeds.
SurfaceClass commutator_swap_class(std::size_t g, const IntMatrix& x, const IntMatrix& y);            // (X,Y),(Y,X)
SurfaceClass shifted_swap_class(std::size_t g, const IntMatrix& x, const IntMatrix& y, long k);     // (X,Y),(Y X^k, X)
SurfaceClass torus_class(std::size_t g, const IntMatrix& a, const IntMatrix& b);                     // AB = BA
// [X,Y]^k = I as a genus-k class; throws RelatorViolation otherwise.
SurfaceClass commutator_power_class(std::size_t g, const IntMatrix& x, const IntMatrix& y, std::size_t k);
SurfaceClass conjugate_class(const SurfaceClass& cls, const IntMatrix& c);
SurfaceClass concatenate(const SurfaceClass& a, const SurfaceClass& b);
AffineSurfaceClass concatenate(const AffineSurfaceClass& a, const AffineSurfaceClass& b);
AffineSurfaceClass scale_translations(const AffineSurfaceClass& cls, const Int& t);

// A word with zero exponent sum in every letter, rewritten in the free group as
// an exact product of commutators [a_1,b_1]...[a_k,b_k].
std::vector<std::pair<Word, Word>> commutator_decomposition(const Word& w);
// The class of a relator: letter i (1-based) is sent to letters[i-1], the word
// must evaluate to I and have zero exponent sums.
SurfaceClass class_from_relator(std::size_t g, const std::vector<IntMatrix>& letters, const Word& w);

// Linear constraints on stacked translations (v_1, w_1, ..., v_h, w_h): a lift
// is valid iff this 2g x 4gh matrix kills it.
IntMatrix translation_constraints(const SurfaceClass& cls);
// A random valid lift with coefficients in [-bound, bound] on a kernel basis.
AffineSurfaceClass random_affine_lift(const SurfaceClass& cls, std::mt19937_64& rng, long bound);

// The torus with trivial holonomy and translations e_1, f_1.
AffineSurfaceClass torus_generator_class(std::size_t g);

// Random product of `length` factors drawn from the generators and their inverses.
IntMatrix random_word_product(const std::vector<IntMatrix>& gens, std::size_t length, std::mt19937_64& rng);

// Order of A if it is finite and at most `bound`.
std::optional<std::size_t> finite_order(const IntMatrix& a, std::size_t bound);

}  // namespace hcmcg
