#include <doctest.h>

#include "hcmcg/cocycles.hpp"
#include "hcmcg/error.hpp"
#include "hcmcg/symplectic.hpp"
#include "oracles.hpp"

using namespace hcmcg;

namespace {

IntVector basis_vector(std::size_t dim, std::size_t i) {
  IntVector v(dim, 0);
  v[i] = 1;
  return v;
}

}  // namespace

TEST_CASE("generators preserve the forms") {
  for (std::size_t g = 1; g <= 4; ++g) {
    IntMatrix j = wall_lambda(g, -1), jp = wall_lambda(g, 1);
    for (GroupFamily f : {GroupFamily::Sp, GroupFamily::SpQ, GroupFamily::Ogg}) {
      auto gens = standard_generators(f, g);
      CHECK(!gens.empty());
      for (const auto& a : gens) {
        CHECK(a.transpose() * (f == GroupFamily::Ogg ? jp : j) * a == (f == GroupFamily::Ogg ? jp : j));
        CHECK(is_member(f, a, g));
      }
    }
  }
}

TEST_CASE("q is preserved by SpQ and Ogg generators") {
  std::mt19937_64 rng(31);
  for (std::size_t g = 1; g <= 4; ++g) {
    WallForm odd = WallForm::for_dimension(g, 3), even = WallForm::for_dimension(g, 4);
    for (const auto& a : standard_generators(GroupFamily::SpQ, g)) {
      for (std::size_t i = 0; i < 2 * g; ++i)
        CHECK(q_eval(odd, a * basis_vector(2 * g, i)) == q_eval(odd, basis_vector(2 * g, i)));
      for (int t = 0; t < 10; ++t) {
        IntVector x = oracle::random_matrix(rng, 2 * g, 1, 5).column(0);
        CHECK(q_eval(odd, a * x) == q_eval(odd, x));
      }
    }
    for (const auto& a : standard_generators(GroupFamily::Ogg, g))
      for (int t = 0; t < 10; ++t) {
        IntVector x = oracle::random_matrix(rng, 2 * g, 1, 5).column(0);
        CHECK(q_eval(even, a * x) == q_eval(even, x));
      }
  }
  // The transvection along e_1 does not preserve q mod 2.
  CHECK(!is_member(GroupFamily::SpQ, transvection({1, 0}), 1));
  CHECK(is_member(GroupFamily::Sp, transvection({1, 0}), 1));
}

TEST_CASE("wall forms") {
  WallForm w = WallForm::for_dimension(2, 5);
  CHECK(w.epsilon == -1);
  CHECK(w.q_value_modulus == 2);
  CHECK(q_eval(w, {1, 0, 1, 0}) == 1);
  CHECK(q_eval(w, {1, 1, 1, 1}) == 0);
  CHECK(WallForm::for_dimension(2, 4).epsilon == 1);
  CHECK(WallForm::for_dimension(2, 4).q_value_modulus == 0);
  CHECK(WallForm::for_dimension(1, 3).q_value_modulus == 1);
  CHECK(WallForm::for_dimension(1, 7).q_value_modulus == 1);
  CHECK(q_eval(WallForm::for_dimension(1, 7), {1, 1}) == 0);
  CHECK_THROWS_AS(q_eval(w, {1, 0}), DimensionMismatch);
  CHECK_THROWS_AS(wall_lambda(2, 0), InvalidArgument);
}

TEST_CASE("theta index") {
  for (std::size_t g = 1; g <= 5; ++g) {
    Int closed = (Int(1) << (2 * g - 1)) + (Int(1) << (g - 1));
    CHECK(theta_index(g) == closed);
    CHECK(theta_index_closed_form(g) == closed);
    if (g <= 4) CHECK(theta_index(g) == static_cast<unsigned long>(oracle::even_refinements(g)));
  }
  CHECK(theta_index(2) == 10);
  CHECK_THROWS_AS(theta_index(0), InvalidArgument);
}

TEST_CASE("random products stay in the group") {
  std::mt19937_64 rng(32);
  for (std::size_t g = 1; g <= 3; ++g)
    for (GroupFamily f : {GroupFamily::Sp, GroupFamily::SpQ, GroupFamily::Ogg}) {
      auto gens = standard_generators(f, g);
      for (int t = 0; t < 30; ++t) {
        std::size_t len = 1 + rng() % 8;
        IntMatrix a = gens[rng() % gens.size()];
        for (std::size_t i = 1; i < len; ++i) a = a * gens[rng() % gens.size()];
        CHECK(is_member(f, a, g));
      }
    }
}

TEST_CASE("membership rejects") {
  CHECK(!is_member(GroupFamily::Sp, IntMatrix{{2, 0}, {0, 1}}, 1));
  CHECK_THROWS_AS(is_member(GroupFamily::Sp, IntMatrix::identity(4), 1), DimensionMismatch);
  CHECK(!is_member(GroupFamily::Ogg, IntMatrix{{0, -1}, {1, 0}}, 1));
  CHECK(is_member(GroupFamily::Ogg, -IntMatrix::identity(2), 1));
}

TEST_CASE("families and helpers") {
  CHECK(family_for_dimension(3) == GroupFamily::Sp);
  CHECK(family_for_dimension(7) == GroupFamily::Sp);
  CHECK(family_for_dimension(5) == GroupFamily::SpQ);
  CHECK(family_for_dimension(9) == GroupFamily::SpQ);
  CHECK(family_for_dimension(4) == GroupFamily::Ogg);
  CHECK(parse_family(family_name(GroupFamily::SpQ)) == GroupFamily::SpQ);
  CHECK_THROWS_AS(parse_family("GL"), InvalidArgument);

  std::mt19937_64 rng(33);
  auto gens = standard_generators(GroupFamily::Sp, 3);
  for (int t = 0; t < 20; ++t) {
    IntMatrix a = random_word_product(gens, 6, rng);
    CHECK(a * symplectic_inverse(a) == IntMatrix::identity(6));
  }
  IntMatrix m{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
  IntMatrix b = block_diagonal_gl(m);
  CHECK(is_member(GroupFamily::Sp, b, 3));
  CHECK(is_member(GroupFamily::Sp, transvection({1, 0, 1, 1, 0, 0}), 3));
  CHECK_THROWS_AS(block_diagonal_gl(IntMatrix{{2, 0}, {0, 1}}), InvalidArgument);
}
