#include <doctest.h>

#include "cnlie/error.hpp"
#include "cnlie/families.hpp"
#include "cnlie/io.hpp"
#include "support/random.hpp"

using namespace cnlie;

TEST_CASE("algebra JSON round trip") {
  for (const auto& g : {g4(4), g41(5), r4k(4, 2), testing::sl2(), LieAlgebra::abelian(2)}) {
    const LieAlgebra back = algebra_from_json(algebra_to_json(g));
    CHECK(back == g);
    CHECK(back.labels() == g.labels());
  }
  // serialisation is a canonical form
  CHECK(algebra_to_json(algebra_from_json(algebra_to_json(g4(5)))) == algebra_to_json(g4(5)));
}

TEST_CASE("algebra JSON accepts rationals and default labels") {
  const LieAlgebra g = algebra_from_json(R"({"dim": 3, "brackets": [{"i":1,"j":2,"k":3,"c":"-6/4"}]})");
  CHECK(g.coeff(0, 1, 2) == Rational(-3, 2));
  CHECK(g.labels() == std::vector<std::string>{"X1", "X2", "X3"});
}

TEST_CASE("algebra JSON rejects malformed input") {
  CHECK_THROWS_AS(algebra_from_json("{"), ParseError);
  CHECK_THROWS_AS(algebra_from_json("[]"), ParseError);
  CHECK_THROWS_AS(algebra_from_json(R"({"dim": -1, "brackets": []})"), ParseError);
  CHECK_THROWS_AS(algebra_from_json(R"({"dim": 3, "brackets": [{"i":2,"j":1,"k":3,"c":"1"}]})"), ParseError);
  CHECK_THROWS_AS(algebra_from_json(R"({"dim": 3, "brackets": [{"i":1,"j":2,"k":4,"c":"1"}]})"), ParseError);
  CHECK_THROWS_AS(algebra_from_json(R"({"dim": 3, "brackets": [{"i":1,"j":2,"k":3}]})"), ParseError);
  CHECK_THROWS_AS(algebra_from_json(R"({"dim": 3, "brackets": [{"i":1,"j":2,"k":3,"c":"1/0"}]})"), ParseError);
  CHECK_THROWS_AS(algebra_from_json(R"({"dim": 2, "basis": ["a"], "brackets": []})"), ParseError);
}

TEST_CASE("cochain JSON round trip") {
  const Cochain2 psi = psi_family(5, 2, 3) + psi_family(5, 3, 1) * Rational(-1, 2);
  CHECK(cochain_from_json(cochain_to_json(psi), 11) == psi);
  CHECK_THROWS_AS(cochain_from_json(cochain_to_json(psi), 5), ParseError);
  ScalarCochain2 phi(9);
  phi.set(1, 6, Rational(2, 3));
  phi.set(3, 4, -1);
  CHECK(scalar_cochain_from_json(scalar_cochain_to_json(phi), 9) == phi);
  CHECK_THROWS_AS(scalar_cochain_from_json(R"({"terms": [{"i":3,"j":3,"c":"1"}]})", 9), ParseError);
}
