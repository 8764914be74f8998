#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cnlie/invariants.hpp"
#include "cnlie/liealg.hpp"

namespace cnlie::tools {

struct Row {
  std::string claim;
  std::optional<std::size_t> m;
  std::string subject;
  std::string expected;
  std::string computed;
  bool pass = false;
  bool informational = false;  // reported, never counted as a failure
};

// Substitutions for the family instances the claims are evaluated on; used to
// feed perturbed fixtures through the suite as a negative control.
struct Context {
  std::map<std::size_t, LieAlgebra> g4_override;  // keyed by m
  std::uint64_t seed = kDefaultSeed;               // characteristic-sequence sampling
  LieAlgebra g4(std::size_t m) const;
};

struct Claim {
  std::string id;
  int criterion = 0;
  std::string statement;
  // Per-parameter claims run once per m; global claims (per_m = false) once.
  bool per_m = true;
  std::size_t min_m = 4, max_m = 99;
  std::vector<std::size_t> acceptance_ms;  // parameters the acceptance suite pins
  std::function<std::vector<Row>(const Context&, std::optional<std::size_t>)> run;
};

// Fixed order: reports follow the manifest, not evaluation order.
const std::vector<Claim>& manifest();

struct Cell {
  const Claim* claim;
  std::optional<std::size_t> m;
};

// Cells for verify-paper over an inclusive m range.
std::vector<Cell> cells_for_range(std::size_t lo, std::size_t hi);
// Cells the acceptance suite runs for one criterion.
std::vector<Cell> cells_for_criterion(int criterion);

// Evaluates cells on up to `jobs` threads; rows come back in cell order.
std::vector<Row> evaluate(const std::vector<Cell>& cells, const Context& ctx, unsigned jobs = 1);

bool all_pass(const std::vector<Row>& rows);

}  // namespace cnlie::tools
