#pragma once

#include <cstddef>
#include <vector>

#include "cnlie/liealg.hpp"

namespace cnlie {

// Default dimension guard for full adjoint H² computations.
inline constexpr std::size_t kAdjointH2Bound = 16;

struct DerivationSpace {
  std::size_t algebra_dim = 0;
  std::vector<RatMatrix> basis;  // canonical: RREF rows of the flattened space
  Subspace space;                // in row-major flattened n×n coordinates
};

bool is_derivation(const LieAlgebra& g, const RatMatrix& d);
DerivationSpace derivation_space(const LieAlgebra& g);

Subspace inner_derivations(const LieAlgebra& g);  // flattened coordinates
std::size_t h1_dim(const LieAlgebra& g);

struct CNReport {
  bool characteristically_nilpotent = false;
  std::vector<std::size_t> series_dims;  // dims of the lower central series of Der(g)
};
// Der(g) is nilpotent iff its lower central series (spans of iterated
// commutators of matrices) reaches 0.
CNReport characteristic_nilpotency(const LieAlgebra& g);
inline bool is_characteristically_nilpotent(const LieAlgebra& g) {
  return characteristic_nilpotency(g).characteristically_nilpotent;
}

struct TorusReport {
  std::size_t diagonal_torus_dim = 0;
  std::vector<std::vector<Integer>> weight_vectors;  // primitive integer basis
};
// Derivations that are diagonal in the given basis. A lower bound for the rank
// in general; exact for algebras whose maximal torus is diagonal in the basis.
TorusReport diagonal_torus(const LieAlgebra& g);

bool is_complete(const LieAlgebra& g);

// dim H²(g, g); refuses (ResourceError) when dim g exceeds the bound.
std::size_t h2_adjoint_dim(const LieAlgebra& g, std::size_t bound = kAdjointH2Bound);

// D X_j ∈ span{X_i : i > j} for all j, i.e. only entries strictly below the
// diagonal in column convention.
bool raises_index(const RatMatrix& d);

}  // namespace cnlie
