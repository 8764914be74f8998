#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cnlie_tools/cli.hpp"

using cnlie::tools::run_cli;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kFixture = std::string(CNLIE_FIXTURE_DIR) + "/g4_m4_perturbed.json";

}  // namespace

TEST_CASE("build") {
  const Run r = cli({"build", "g4:m=4"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["dim"] == 9);
  CHECK(json::parse(cli({"build", "L:n=3"}).out)["dim"] == 4);

  const Run bad = cli({"build", "g4:m=3"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("m ≥ 4 required") != std::string::npos);
  CHECK(cli({"build", "nonsense"}).code == 2);
  // r4k with odd k below 2m−5 has no Lie law
  CHECK(cli({"build", "r4k:m=4,k=1"}).code == 3);
}

TEST_CASE("usage errors") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"analyze"}).code == 2);
  CHECK(cli({"analyze", "{not json"}).code == 2);
  CHECK(cli({"verify-paper", "--m-range", "7..8"}).code == 2);
  CHECK(cli({"verify-paper", "--m-range", "5..4"}).code == 2);
  CHECK(cli({"verify-paper", "--m-range", "3..4"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("analyze g4") {
  const Run r = cli({"analyze", "g4:m=4", "--invariants", "--derivations"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["lie_algebra"] == true);
  CHECK(j["invariants"]["nilindex"] == 7);
  CHECK(j["invariants"]["characteristic_sequence"] == json::array({7, 1, 1}));
  CHECK(j["invariants"]["abelianity_index"] == 3);
  CHECK(j["derivations"]["dim_der"] == 15);
  CHECK(j["derivations"]["h1"] == 8);
  CHECK_FALSE(j.contains("cohomology"));
}

TEST_CASE("analyze an abelian algebra from a file-free JSON document") {
  const Run r = cli({"analyze", R"({"dim": 3, "brackets": []})", "--derivations"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["derivations"]["dim_der"] == 9);
}

TEST_CASE("analyze reports Jacobi defects with exit 3") {
  const Run r = cli({"analyze", kFixture});
  CHECK(r.code == 3);
  const json j = json::parse(r.out);
  CHECK(j["lie_algebra"] == false);
  REQUIRE(j["jacobi_defects"].size() == 1);
  CHECK(j["jacobi_defects"][0]["i"] == 1);
  CHECK(j["jacobi_defects"][0]["j"] == 2);
  CHECK(j["jacobi_defects"][0]["k"] == 6);
  CHECK(j["jacobi_defects"][0]["s"] == 9);
}

TEST_CASE("deform and extend") {
  const Run ok = cli({"deform", "g4:m=4", "psi:k=2,r=2,c=1"});
  REQUIRE(ok.code == 0);
  CHECK(json::parse(ok.out)["dim"] == 9);
  const Run bad = cli({"deform", "g4:m=4", "psi:k=2,r=1"});
  CHECK(bad.code == 3);
  CHECK(json::parse(bad.out)["expandable"] == false);
  CHECK(json::parse(bad.out)["cocycle"] == false);

  const Run ext = cli({"extend", "g4:m=4", R"({"terms": [{"i":1,"j":2,"c":"1"}]})"});
  REQUIRE(ext.code == 0);
  CHECK(json::parse(ext.out)["dim"] == 10);
  CHECK(cli({"extend", "g4:m=4", R"({"terms": [{"i":2,"j":7,"c":"1"}]})"}).code == 3);
}

TEST_CASE("verify-paper negative control and determinism") {
  const Run r = cli({"verify-paper", "--m-range", "4..4", "--fixture", kFixture, "--json", "--jobs", "2"});
  CHECK(r.code == 1);
  const json j = json::parse(r.out);
  CHECK(j["pass"] == false);
  bool jacobi_row_failed = false;
  for (const auto& row : j["rows"])
    if (row["claim"] == "c01.jacobi.families" && row["subject"] == "g4:m=4")
      jacobi_row_failed = row["status"] == "FAIL";
  CHECK(jacobi_row_failed);

  // byte-identical output regardless of thread count
  const Run a = cli({"verify-paper", "--m-range", "4..4", "--table", "--jobs", "1"});
  const Run b = cli({"verify-paper", "--m-range", "4..4", "--table", "--jobs", "4"});
  CHECK(a.out == b.out);
  CHECK(a.code == b.code);
  const Run s1 = cli({"analyze", "g41:m=4", "--invariants", "--seed", "17"});
  const Run s2 = cli({"analyze", "g41:m=4", "--invariants", "--seed", "17"});
  CHECK(s1.out == s2.out);
}
