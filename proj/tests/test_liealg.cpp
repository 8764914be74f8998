#include <doctest.h>

#include "cnlie/error.hpp"
#include "cnlie/families.hpp"
#include "cnlie/liealg.hpp"
#include "support/random.hpp"

using namespace cnlie;

TEST_CASE("Heisenberg bracket and adjoint") {
  const LieAlgebra h = testing::heisenberg3();
  CHECK(h.coeff(0, 1, 2) == 1);
  CHECK(h.coeff(1, 0, 2) == -1);
  CHECK(h.bracket(0, 0).empty());
  // ad X1: X2 ↦ X3, column convention
  const RatMatrix ad = h.ad(0);
  CHECK(ad(2, 1) == 1);
  CHECK(ad(1, 2) == 0);
  CHECK(h.labels() == std::vector<std::string>{"X1", "X2", "X3"});
  CHECK(is_lie_algebra(h));
}

TEST_CASE("constructor rejects malformed terms") {
  CHECK_THROWS_AS(LieAlgebra(3, {{1, 0, 2, Rational(1)}}), ParameterError);
  CHECK_THROWS_AS(LieAlgebra(3, {{0, 1, 3, Rational(1)}}), ParameterError);
  CHECK_THROWS_AS(LieAlgebra(2, {}, {"a"}), DimensionError);
}

TEST_CASE("repeated terms accumulate and cancel") {
  const LieAlgebra g(3, {{0, 1, 2, Rational(1)}, {0, 1, 2, Rational(-1)}});
  CHECK(g.terms().empty());
  CHECK(g == LieAlgebra::abelian(3));
}

TEST_CASE("sl2 satisfies Jacobi; a perturbed law reports its defect") {
  CHECK(jacobi_defect(testing::sl2()).empty());
  // [X1,X2] = X2, [X2,X3] = X3:
  // J(X1,X2,X3) = [[X1,X2],X3] + [[X2,X3],X1] + [[X3,X1],X2] = X3 + [X3,X1] + 0 = X3.
  const LieAlgebra bad(3, {{0, 1, 1, Rational(1)}, {1, 2, 2, Rational(1)}});
  const auto v = jacobi_defect(bad);
  REQUIRE(v.size() == 1);
  CHECK(v[0].i == 0);
  CHECK(v[0].j == 1);
  CHECK(v[0].k == 2);
  CHECK(v[0].s == 2);
  CHECK(v[0].value == 1);
  CHECK_FALSE(is_lie_algebra(bad));
}

TEST_CASE("Maurer-Cartan round trip") {
  for (const auto& g : {g4(4), g41(5), testing::sl2()}) {
    const MaurerCartanForm mc = to_maurer_cartan(g);
    CHECK(from_maurer_cartan(mc) == g);
  }
  // dω3 = ω1∧ω2 is the Heisenberg law.
  MaurerCartanForm mc{3, {{}, {}, {{0, 1, Rational(1)}}}};
  CHECK(from_maurer_cartan(mc) == testing::heisenberg3());
}

TEST_CASE("bracket of elements is bilinear in the structure constants") {
  const LieAlgebra g = g4(4);
  const Vector x = basis_vector(9, 1), y = basis_vector(9, 6);
  // [X2, X7] = (+1) X9
  CHECK(g.bracket(x, y) == basis_vector(9, 8));
}
