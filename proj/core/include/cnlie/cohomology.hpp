#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "cnlie/invariants.hpp"
#include "cnlie/liealg.hpp"

namespace cnlie {

// Position of the unordered pair {i, j} (i < j) in lexicographic order.
std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j);
std::pair<std::size_t, std::size_t> pair_at(std::size_t n, std::size_t index);
inline std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

// Alternating bilinear map g × g → Q.
class ScalarCochain2 {
 public:
  explicit ScalarCochain2(std::size_t n = 0) : n_(n) {}
  static ScalarCochain2 from_coords(std::size_t n, const SparseVector& coords);

  std::size_t dim() const { return n_; }
  Rational operator()(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Rational& c);  // any i != j, sign handled
  const std::map<std::pair<std::size_t, std::size_t>, Rational>& terms() const { return c_; }
  SparseVector coords() const;  // over pair_index
  bool is_zero() const { return c_.empty(); }
  bool operator==(const ScalarCochain2&) const = default;

 private:
  std::size_t n_;
  std::map<std::pair<std::size_t, std::size_t>, Rational> c_;  // i < j, nonzero
};

// Alternating bilinear map g × g → g. Coordinates: pair_index(i,j) * n + k.
class Cochain2 {
 public:
  explicit Cochain2(std::size_t n = 0) : n_(n) {}
  static Cochain2 from_coords(std::size_t n, const SparseVector& coords);

  std::size_t dim() const { return n_; }
  Rational coeff(std::size_t i, std::size_t j, std::size_t k) const;
  void set(std::size_t i, std::size_t j, std::size_t k, const Rational& c);  // any i != j
  void add(std::size_t i, std::size_t j, std::size_t k, const Rational& c);
  SparseVector value(std::size_t i, std::size_t j) const;  // ψ(X_i, X_j)
  std::vector<BracketTerm> terms() const;                  // i < j, nonzero
  SparseVector coords() const;
  bool is_zero() const { return c_.empty(); }

  Cochain2 operator+(const Cochain2& o) const;
  Cochain2 operator*(const Rational& s) const;
  bool operator==(const Cochain2&) const = default;

 private:
  std::size_t n_;
  std::map<std::size_t, Rational> c_;  // flat coordinate -> nonzero value
};

// ---------------------------------------------------------------- adjoint

// δψ(x,y,z) = [x,ψ(y,z)] − [y,ψ(x,z)] + [z,ψ(x,y)] − ψ([x,y],z) + ψ([x,z],y) − ψ([y,z],x)
// over basis triples x < y < z; coordinates (triple_index * n + s).
SparseVector coboundary3(const LieAlgebra& g, const Cochain2& psi);
bool is_cocycle(const LieAlgebra& g, const Cochain2& psi);

// δf(x,y) = [x, f y] − [y, f x] − f[x,y]
Cochain2 coboundary(const LieAlgebra& g, const RatMatrix& f);

// Weight of the coordinate (i,j) -> k: w_k − w_i − w_j.
long cochain_weight(const Grading& gr, std::size_t i, std::size_t j, std::size_t k);

struct CohomologyReport {
  std::size_t z2_dim = 0;
  std::size_t b2_dim = 0;
  std::size_t h2_dim = 0;
  std::vector<Cochain2> basis;              // of Z² (or of the restricted space)
  std::map<long, std::size_t> weight_profile;     // weight -> dim Z²_w (graded input only)
  std::map<long, std::size_t> h2_weight_profile;  // weight -> dim H²_w (graded input only)
};

// Property (P) data: the target vectors Y (central, spanned by basis vectors).
// Condition (1): ψ(X_i, ·) = 0 whenever some target lies outside im ad(X_i).
// Condition (2): no nonzero target lies in im ψ.
struct PropertyP {
  std::vector<std::size_t> targets;  // basis indices spanning the target space
};

struct Z2Options {
  bool restricted = false;        // impose property (P) and the filtration bound
  PropertyP property;             // used when restricted
  long min_weight = 0;            // F_k: keep weights >= min_weight (restricted only)
  bool with_basis = true;
};

// Unrestricted: full Z², B², H² (with per-weight profiles when g is naturally
// graded in its basis). Restricted: the spaces Ẑ², B̂² = B² ∩ (P-space), Ĥ²
// in weights >= min_weight; requires a grading.
CohomologyReport adjoint_z2(const LieAlgebra& g, const Z2Options& opt = {});

// Basis indices i for which condition (1) forces ψ(X_i, ·) = 0.
std::vector<std::size_t> property_p_killed_arguments(const LieAlgebra& g, const PropertyP& p);
bool property_P(const LieAlgebra& g, const Cochain2& psi, const PropertyP& p);

// Canonical basis of the weight-w cocycles whose support lies in the allowed
// flat coordinates (all coordinates of weight w when allowed is null).
std::vector<Cochain2> z2_weight_basis(const LieAlgebra& g, const Grading& gr, long weight,
                                      const std::vector<bool>* allowed = nullptr);

// ψ_{k,r}(X_k, X_j) = X_{k+j−1+r} for k+1 ≤ j ≤ 2m+1−k−r (1-based labels),
// on the (2m+1)-dimensional algebra; alternating extension.
Cochain2 psi_family(std::size_t m, std::size_t k, std::size_t r);

std::map<long, Cochain2> weight_decompose(const Grading& gr, const Cochain2& psi);
// Highest-weight nonzero component; zero cochain for ψ = 0.
Cochain2 sill_cocycle(const Grading& gr, const Cochain2& psi);

// ---------------------------------------------------------------- scalar

bool is_scalar_cocycle(const LieAlgebra& g, const ScalarCochain2& phi);
// (δa)(x, y) = −a([x, y])
ScalarCochain2 scalar_coboundary(const LieAlgebra& g, const Vector& a);

struct ScalarH2 {
  std::size_t dim = 0;
  std::vector<ScalarCochain2> basis;                          // representatives
  std::vector<std::pair<std::size_t, std::size_t>> labels;    // pivot monomial (i<j, 0-based) of each
  Subspace omega;       // in Λ²g, coordinates pair_index
  Subspace ker_lambda;  // in Λ²g
};

// H₂ = Ker λ / Ω with λ(X_i∧X_j) = [X_i, X_j] and Ω spanned by
// [X,Y]∧Z + [Y,Z]∧X + [Z,X]∧Y. The complement of Ω in Ker λ is chosen by
// reduction with monomials ordered by decreasing (i, j); representatives are
// the dual functionals vanishing on Ω.
ScalarH2 scalar_h2(const LieAlgebra& g);

// Element of Λ²g: Σ c X_i∧X_j with i != j (sign handled).
SparseVector wedge2(std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, Rational>>& terms);

struct ScalarLabel {
  Rational t;  // integer t, or t/2 with t odd for the half-integer class
  std::size_t k;
  bool operator==(const ScalarLabel&) const = default;
  auto operator<=>(const ScalarLabel& o) const {
    if (t != o.t) return t < o.t ? std::strong_ordering::less : std::strong_ordering::greater;
    return k <=> o.k;
  }
};

struct ScalarClass {
  std::size_t sum = 0;                                       // i + j, 1-based
  std::vector<std::pair<std::size_t, std::size_t>> cocycles; // 1-based (i, j)
  std::vector<ScalarLabel> labels;                           // every admissible (t, k)
};

// Partition of labelled representatives by i + j (1-based), each class
// carrying all (t, k) with i+j = 2t+1+k, or t odd and i+j = t+1+k (label t/2),
// for 1 ≤ t, k ≤ n − 2.
std::vector<ScalarClass> scalar_partition(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& labels);

}  // namespace cnlie
