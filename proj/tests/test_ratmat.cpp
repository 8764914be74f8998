#include <doctest.h>

#include "cnlie/error.hpp"
#include "cnlie/ratmat.hpp"
#include "cnlie/rational.hpp"
#include "support/random.hpp"

using namespace cnlie;

namespace {
RatMatrix rows(std::initializer_list<std::initializer_list<long>> r) {
  std::vector<Vector> vs;
  for (auto row : r) {
    Vector v;
    for (long x : row) v.emplace_back(x);
    vs.push_back(v);
  }
  return RatMatrix::from_rows(vs);
}
}  // namespace

TEST_CASE("rational text form is canonical") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-4/2")) == "-2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(parse_rational("-10/4") == Rational(-5, 2));
  CHECK_THROWS_AS(parse_rational("10/-4"), ParseError);
  CHECK(parse_rational(" 7 ") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("rank of hand-checked matrices") {
  CHECK(rank(rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
  CHECK(rank(rows({{0, 0}, {0, 0}})) == 0);
  CHECK(rank(RatMatrix::identity(5)) == 5);
  CHECK(rank(rows({{1, 2}, {2, 4}, {3, 6}})) == 1);
  // Hilbert matrix of order 4 is nonsingular.
  RatMatrix h(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) h(i, j) = Rational(1, static_cast<long>(i + j + 1));
  CHECK(rank(h) == 4);
}

TEST_CASE("nullspace of a 3x3 rank-2 matrix is spanned by (1,-2,1)") {
  const Subspace k = nullspace(rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}));
  REQUIRE(k.dim() == 1);
  CHECK(k.contains(Vector{Rational(1), Rational(-2), Rational(1)}));
  CHECK(primitive_integer(k.dense_basis()[0]) == std::vector<Integer>{1, -2, 1});
}

TEST_CASE("subspaces are canonical") {
  const Subspace a = Subspace::span(3, std::vector<Vector>{{1, 1, 0}, {0, 1, 1}});
  const Subspace b = Subspace::span(3, std::vector<Vector>{{1, 2, 1}, {1, 0, -1}});
  CHECK(a == b);
  CHECK(a.dim() == 2);
  CHECK(a.pivots() == std::vector<std::size_t>{0, 1});
  const auto coords = a.coordinates(Vector{2, 3, 1});
  REQUIRE(coords);
  CHECK_FALSE(a.coordinates(Vector{0, 0, 1}));
}

TEST_CASE("sum, intersection and annihilator") {
  const Subspace xy = Subspace::coordinate(3, {0, 1});
  const Subspace yz = Subspace::coordinate(3, {1, 2});
  CHECK(sum(xy, yz) == Subspace::full(3));
  CHECK(intersection(xy, yz) == Subspace::coordinate(3, {1}));
  CHECK(xy.annihilator() == Subspace::coordinate(3, {2}));
  CHECK(Subspace(3).annihilator() == Subspace::full(3));
  const auto ops = span_ops(xy, yz, {Vector{1, 0, 0}, Vector{0, 0, 1}});
  CHECK(ops.contains == std::vector<bool>{true, false});
  CHECK_THROWS_AS(sum(xy, Subspace::full(4)), DimensionError);
}

TEST_CASE("solve returns a solution or reports inconsistency") {
  const RatMatrix m = rows({{2, 1}, {1, 3}});
  const auto x = solve(m, Vector{3, 5});
  REQUIRE(x);
  CHECK(*x == Vector{Rational(4, 5), Rational(7, 5)});
  CHECK_FALSE(solve(rows({{1, 1}, {1, 1}}), Vector{1, 2}));
}

TEST_CASE("echelon rref and reduce") {
  Echelon e(4);
  CHECK(e.insert(to_sparse(Vector{0, 2, 4, 0})));
  CHECK(e.insert(to_sparse(Vector{1, 1, 1, 1})));
  CHECK_FALSE(e.insert(to_sparse(Vector{2, 4, 6, 2})));
  CHECK(e.rank() == 2);
  CHECK(e.contains(to_sparse(Vector{1, 3, 5, 1})));
  const auto r = e.rref();
  REQUIRE(r.size() == 2);
  CHECK(to_dense(r[0], 4) == Vector{1, 0, -1, 1});
  CHECK(to_dense(r[1], 4) == Vector{0, 1, 2, 0});
  CHECK(nullspace_basis(e).size() == 2);
}

TEST_CASE("matrix arithmetic") {
  const RatMatrix a = rows({{1, 2}, {3, 4}}), b = rows({{0, 1}, {1, 0}});
  CHECK(a * b == rows({{2, 1}, {4, 3}}));
  CHECK(commutator(a, b) == rows({{-1, -3}, {3, 1}}));
  CHECK(a.transpose() == rows({{1, 3}, {2, 4}}));
  CHECK(RatMatrix::unflatten(2, 2, a.flatten()) == a);
  CHECK_THROWS_AS(a * RatMatrix(3, 3), DimensionError);
}

TEST_CASE("Bareiss and echelon ranks agree on random matrices") {
  testing::Rng rng(7);
  for (int c = 0; c < 100; ++c) {
    const RatMatrix m = testing::random_low_rank(rng, 1 + rng.index(8), 1 + rng.index(8));
    CHECK(rank(m) == Subspace::span(m.cols(), m.sparse_rows()).dim());
  }
}
