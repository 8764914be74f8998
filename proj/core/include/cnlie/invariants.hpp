#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cnlie/liealg.hpp"

namespace cnlie {

// Fixed default for the characteristic-sequence sampler.
inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct SeriesReport {
  std::vector<Subspace> descending;  // C^0 = g, C^1, ..., ending at 0 when nilpotent
  std::vector<Subspace> ascending;   // C_0 = 0, C_1 = center, ..., ending at g when nilpotent
  std::optional<std::size_t> nilindex;  // least p with C^p = 0
};

// Span of [a, b] over a in A, b in B.
Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b);

SeriesReport central_series(const LieAlgebra& g);
std::vector<Subspace> derived_series(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);
bool is_solvable(const LieAlgebra& g);

Subspace center(const LieAlgebra& g);
bool is_abelian(const LieAlgebra& g, const Subspace& s);

// Least k with C^k abelian; 0 for abelian input. Throws ParameterError if g is not nilpotent.
std::size_t abelianity_index(const LieAlgebra& g);
bool is_type_Qn(const LieAlgebra& g);

using CharSequence = std::vector<std::size_t>;

// Jordan block sizes of a nilpotent matrix, decreasing, from the rank profile
// of its powers. Throws ParameterError if the matrix is not nilpotent.
CharSequence jordan_type(const RatMatrix& nilpotent);

// Lexicographic maximum of jordan_type(ad X) over the candidate set: basis
// vectors outside C^1, their pairwise sums, and 32 seeded random combinations
// with coefficients in {-3..3}.
CharSequence characteristic_sequence(const LieAlgebra& g, std::uint64_t seed = kDefaultSeed);

struct Grading {
  std::vector<Subspace> blocks;         // blocks[w-1] = g_w
  std::vector<std::size_t> weight;      // weight of each basis vector
};

// Weight of X_i = 1 + max{q : X_i ∈ C^q g}. Returns the grading when the basis
// is adapted to the descending series and every bracket is homogeneous;
// nullopt otherwise (which is inconclusive about natural gradedness).
std::optional<Grading> natural_grading(const LieAlgebra& g);

struct Filtration {
  std::vector<Subspace> S;  // S[q-1] = C^{q-1} g, q = 1..p
  std::vector<Subspace> T;  // T[q-1] = C_{p+1-q} g, q = 1..p
};
Filtration filtrations(const LieAlgebra& g);

// f(S_i) ⊆ T_i for every i; f is a linear map in column convention.
bool vergne_check(const LieAlgebra& g, const RatMatrix& f);
bool vergne_check(const Filtration& filt, const RatMatrix& f);

// Image of a subspace under a linear map.
Subspace image(const RatMatrix& f, const Subspace& s);

}  // namespace cnlie
