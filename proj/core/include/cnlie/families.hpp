#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cnlie/cohomology.hpp"
#include "cnlie/error.hpp"
#include "cnlie/liealg.hpp"

namespace cnlie {

// ---------------------------------------------------------------- models
// All constructors index the basis as X_1..X_n in comments; code is 0-based.

// [X1, Xi] = X_{i+1}, 2 ≤ i ≤ n; dimension n + 1.
LieAlgebra model_L(std::size_t n);
// L_{2m-1} plus [Xj, X_{2m+1-j}] = (−1)^j X_{2m}, 2 ≤ j ≤ m; dimension 2m.
LieAlgebra model_Q(std::size_t m);
// dω_j = ω1∧ω_{j−1} (3 ≤ j ≤ 2m), dω_{2m+1} = Σ_{j=2}^{m} (−1)^j ω_j∧ω_{2m+1−j}.
LieAlgebra g4(std::size_t m);
// g4 plus dω_{2m+2} = ω1∧ω_{2m+1} + Σ_{j=2}^{m} (−1)^j (m+1−j) ω_j∧ω_{2m+2−j}.
LieAlgebra g41(std::size_t m);
// g41 with dω_{2m} gaining ω2∧ω3.
LieAlgebra e1(std::size_t m);
// Nilradical g4 + ψ_{2,k} plus θ acting as diag(1, k+1, k+2, ..., k+2m−1, 2k+2m−1).
LieAlgebra r4k(std::size_t m, std::size_t k);
// Nilradical g41 + ψ̄_{2,2m−5} (ω2∧ω3 in dω_{2m−1}, ω2∧ω4 in dω_{2m}) plus a torus θ.
LieAlgebra r41(std::size_t m);
// [X1, Xi] = X_{i+1}, 2 ≤ i ≤ 5, [X2, X3] = X7.
LieAlgebra g7();

// Weights of θ on the nilradical basis of r4k and r41.
std::vector<long> r4k_weights(std::size_t m, std::size_t k);
std::vector<long> r41_weights(std::size_t m);

// Explicit derivations of g4 at parameter m (1-based names f_i^j: X_i ↦ ...).
struct NamedMap {
  std::string name;
  RatMatrix map;
};
// The 4m+1 maps: ad X1..ad X_{2m−1}, f₁¹, f₁², f₁^{2m+1}, f₂², f₂^{3+j}
// (1 ≤ j ≤ 2m−4), f₂^{2m}, f₂^{2m+1}. f₁² is the degree-0 map
// X1 ↦ X2, X_{2m} ↦ X_{2m+1}.
std::vector<NamedMap> g4_derivation_basis(std::size_t m);
// The map X1 ↦ X2, X2 ↦ X_{2m+1} (not a derivation; kept for tests).
RatMatrix g4_f12_displayed(std::size_t m);

// Property (P) targets for g4: the extension centre ⟨X_{2m+1}⟩.
PropertyP g4_property(std::size_t m);

// Σ_{j=2}^{m} (−1)^j φ_{j,2m+1−j} on L_{2m−1} (dimension 2m).
ScalarCochain2 canonical_L_cocycle(std::size_t m);
// The scalar cocycle on g4 read from the dω_{2m+2} line of g41.
ScalarCochain2 g41_cocycle(std::size_t m);

// ---------------------------------------------------------------- specs

enum class Family { L, Q, g4, g41, r4k, r41, e1 };

struct CocycleTerm {
  std::size_t k = 2, r = 0;
  Rational c = 1;
};

struct FamilySpec {
  Family family = Family::g4;
  std::size_t m = 0;               // n for L
  std::optional<std::size_t> k;    // r4k only
  std::vector<CocycleTerm> extra;  // g4 only: + Σ c ψ_{k,r}
};

// "g4:m=5", "r4k:m=4,k=3", "L:n=8". Throws ParseError / ParameterError.
FamilySpec parse_family_spec(std::string_view text);
// "psi:k=2,r=3,c=1"
CocycleTerm parse_cocycle_term(std::string_view text);
std::string to_string(const FamilySpec& spec);
void validate(const FamilySpec& spec);

// Does not test Jacobi; callers decide how to treat defects.
LieAlgebra build(const FamilySpec& spec);

// ---------------------------------------------------------------- operators

// μ + ψ as a raw tensor (no Jacobi check).
LieAlgebra add_cochain(const LieAlgebra& g, const Cochain2& psi);
bool is_linearly_expandable(const LieAlgebra& g, const Cochain2& psi);

class NotExpandable : public Error {
 public:
  NotExpandable(std::vector<JacobiViolation> v);
  const std::vector<JacobiViolation>& violations() const { return violations_; }

 private:
  std::vector<JacobiViolation> violations_;
};

// μ + ψ; throws NotExpandable carrying the Jacobi violations.
LieAlgebra deform(const LieAlgebra& g, const Cochain2& psi);

// g ⊕ ⟨Z⟩ with [X, Y] = μ(X, Y) + φ(X, Y) Z; throws ParameterError if φ is not a cocycle.
LieAlgebra central_extension(const LieAlgebra& g, const ScalarCochain2& phi);

Cochain2 prolong_by_zeros(const Cochain2& psi, std::size_t new_dim);

// Diagonal basis change X_i ↦ λ_i X_i carrying g's constants onto h's,
// solved multiplicatively over Q. Absence is inconclusive for isomorphism.
std::optional<RatMatrix> diagonal_equivalence(const LieAlgebra& g, const LieAlgebra& h);

}  // namespace cnlie
