#include <doctest.h>

#include "cnlie/error.hpp"
#include "cnlie/families.hpp"
#include "cnlie/invariants.hpp"
#include "support/random.hpp"

using namespace cnlie;

namespace {
std::vector<std::size_t> dims(const std::vector<Subspace>& s) {
  std::vector<std::size_t> d;
  for (const auto& x : s) d.push_back(x.dim());
  return d;
}
}  // namespace

TEST_CASE("Heisenberg series") {
  const LieAlgebra h = testing::heisenberg3();
  const auto cs = central_series(h);
  CHECK(dims(cs.descending) == std::vector<std::size_t>{3, 1, 0});
  CHECK(dims(cs.ascending) == std::vector<std::size_t>{0, 1, 3});
  CHECK(cs.nilindex == 2u);
  CHECK(center(h).dim() == 1);
  CHECK(abelianity_index(h) == 1);
  CHECK(abelianity_index(LieAlgebra::abelian(4)) == 0);
}

TEST_CASE("g4 series at m = 4") {
  const LieAlgebra g = g4(4);
  const auto cs = central_series(g);
  CHECK(dims(cs.descending) == std::vector<std::size_t>{9, 7, 6, 5, 4, 3, 2, 0});
  CHECK(dims(cs.ascending) == std::vector<std::size_t>{0, 2, 3, 4, 5, 6, 7, 9});
  CHECK(dims(derived_series(g)) == std::vector<std::size_t>{9, 7, 1, 0});
  CHECK(cs.nilindex == 7u);
  CHECK(abelianity_index(g) == 3);
  CHECK(is_type_Qn(g));
}

TEST_CASE("nilpotency and solvability") {
  CHECK_FALSE(is_nilpotent(testing::sl2()));
  CHECK_FALSE(is_solvable(testing::sl2()));
  CHECK(is_solvable(r4k(4, 2)));
  CHECK_FALSE(is_nilpotent(r4k(4, 2)));
  CHECK(center(r4k(4, 2)).is_zero());
  CHECK_THROWS_AS(abelianity_index(testing::sl2()), ParameterError);
}

TEST_CASE("Jordan type from the rank profile") {
  // blocks 3 and 1: e1 -> e2 -> e3 -> 0, e4 -> 0
  RatMatrix n(4, 4);
  n(1, 0) = 1;
  n(2, 1) = 1;
  CHECK(jordan_type(n) == CharSequence{3, 1});
  testing::Rng rng(3);
  const RatMatrix p = testing::random_unimodular(rng, 4);
  CHECK(jordan_type(testing::inverse(p) * n * p) == CharSequence{3, 1});
  CHECK(jordan_type(RatMatrix(3, 3)) == CharSequence{1, 1, 1});
  CHECK_THROWS_AS(jordan_type(RatMatrix::identity(2)), ParameterError);
}

TEST_CASE("characteristic sequences of the models") {
  for (std::size_t n = 3; n <= 8; ++n) CHECK(characteristic_sequence(model_L(n)) == CharSequence{n, 1});
  CHECK(characteristic_sequence(model_Q(4)) == CharSequence{7, 1});
  CHECK(characteristic_sequence(g4(5)) == CharSequence{9, 1, 1});
  CHECK(characteristic_sequence(testing::heisenberg3()) == CharSequence{2, 1});
  CHECK(characteristic_sequence(LieAlgebra::abelian(3)) == CharSequence{1, 1, 1});
  // deterministic under the fixed seed
  CHECK(characteristic_sequence(g41(4), 11) == characteristic_sequence(g41(4), 11));
}

TEST_CASE("g41 has a Jordan block of size 2m under ad(X1 + X2)") {
  // Independent of the sampler: the block structure of one explicit element.
  const LieAlgebra g = g41(4);
  Vector x(10);
  x[0] = 1;
  x[1] = 1;
  CHECK(jordan_type(g.ad(x)) == CharSequence{8, 1, 1});
}

TEST_CASE("natural grading") {
  const auto gr = natural_grading(g4(4));
  REQUIRE(gr);
  CHECK(gr->weight == std::vector<std::size_t>{1, 1, 2, 3, 4, 5, 6, 7, 7});
  CHECK(gr->blocks.size() == 7);
  // e1 adds [X2,X3] = X_{2m}, a bracket of weight 2 landing in weight 2m−1.
  CHECK_FALSE(natural_grading(e1(4)));
  // g41 as written: every bracket is homogeneous for the filtration weights.
  const auto gr41 = natural_grading(g41(4));
  REQUIRE(gr41);
  CHECK(gr41->weight.back() == 8);
}

TEST_CASE("filtrations and the Vergne inclusion") {
  const LieAlgebra g = g4(4);
  const Filtration f = filtrations(g);
  CHECK(dims(f.S) == std::vector<std::size_t>{9, 7, 6, 5, 4, 3, 2});
  CHECK(dims(f.T) == std::vector<std::size_t>{9, 7, 6, 5, 4, 3, 2});
  CHECK(vergne_check(g, g.ad(0)));
  RatMatrix bad(9, 9);
  bad(0, 8) = 1;  // X9 ↦ X1
  CHECK_FALSE(vergne_check(g, bad));
}

TEST_CASE("bracket span and image") {
  const LieAlgebra g = model_L(4);
  const Subspace all = Subspace::full(5);
  CHECK(bracket_span(g, all, all).dim() == 3);
  RatMatrix shift(3, 3);
  shift(1, 0) = 1;
  CHECK(image(shift, Subspace::full(3)) == Subspace::coordinate(3, {1}));
}
