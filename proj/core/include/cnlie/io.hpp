#pragma once

#include <string>
#include <string_view>

#include "cnlie/cohomology.hpp"
#include "cnlie/liealg.hpp"

namespace cnlie {

// {"dim": n, "basis": [labels], "brackets": [{"i":1,"j":2,"k":3,"c":"1"}, ...]}
// 1-based indices, i < j, canonical rationals; brackets sorted by (i, j, k).
std::string algebra_to_json(const LieAlgebra& g, int indent = 2);
// Throws ParseError on malformed documents or index errors.
LieAlgebra algebra_from_json(std::string_view text);

// {"terms": [{"i":2,"j":3,"k":6,"c":"1"}, ...]}
std::string cochain_to_json(const Cochain2& psi, int indent = 2);
Cochain2 cochain_from_json(std::string_view text, std::size_t dim);

// {"terms": [{"i":2,"j":7,"c":"1"}, ...]}
std::string scalar_cochain_to_json(const ScalarCochain2& phi, int indent = 2);
ScalarCochain2 scalar_cochain_from_json(std::string_view text, std::size_t dim);

}  // namespace cnlie
