#include "cnlie/derivations.hpp"

#include <map>

#include "cnlie/cohomology.hpp"
#include "cnlie/error.hpp"
#include "cnlie/invariants.hpp"

namespace cnlie {

bool is_derivation(const LieAlgebra& g, const RatMatrix& d) {
  const std::size_t n = g.dim();
  if (d.rows() != n || d.cols() != n) throw DimensionError("linear map shape differs from algebra");
  // D is a derivation iff its coboundary vanishes.
  return coboundary(g, d).is_zero();
}

DerivationSpace derivation_space(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  // Unknown d(s, k) at s*n + k. For a < b and output s:
  //   Σ_k C^k_ab d(s,k) − Σ_l C^s_lb d(l,a) − Σ_l C^s_al d(l,b) = 0
  std::vector<SparseVector> rows;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      std::map<std::size_t, std::map<std::size_t, Rational>> eq;
      for (const auto& [k, c] : g.bracket(a, b))
        for (std::size_t s = 0; s < n; ++s) eq[s][s * n + k] += c;
      for (std::size_t l = 0; l < n; ++l) {
        for (const auto& [s, c] : g.bracket(l, b)) eq[s][l * n + a] -= c;
        for (const auto& [s, c] : g.bracket(a, l)) eq[s][l * n + b] -= c;
      }
      for (auto& [s, cols] : eq) {
        SparseVector row;
        for (auto& [col, c] : cols)
          if (sgn(c) != 0) row.emplace_back(col, c);
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
  DerivationSpace out;
  out.algebra_dim = n;
  out.space = nullspace(rows, n * n);
  for (const auto& v : out.space.dense_basis()) out.basis.push_back(RatMatrix::unflatten(n, n, v));
  return out;
}

Subspace inner_derivations(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Vector> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(g.ad(i).flatten());
  return Subspace::span(n * n, ads);
}

std::size_t h1_dim(const LieAlgebra& g) { return derivation_space(g).space.dim() - inner_derivations(g).dim(); }

CNReport characteristic_nilpotency(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const auto der = derivation_space(g);
  CNReport rep;
  Subspace cur = der.space;
  rep.series_dims.push_back(cur.dim());
  while (!cur.is_zero()) {
    Echelon e(n * n);
    for (const auto& a : cur.dense_basis()) {
      const RatMatrix A = RatMatrix::unflatten(n, n, a);
      for (const auto& B : der.basis) e.insert(to_sparse(commutator(A, B).flatten()));
    }
    Subspace next = Subspace::from_echelon(e);
    if (next == cur) break;
    cur = std::move(next);
    rep.series_dims.push_back(cur.dim());
  }
  rep.characteristically_nilpotent = cur.is_zero();
  return rep;
}

TorusReport diagonal_torus(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  // diag(d) is a derivation iff d_k = d_i + d_j whenever C^k_ij != 0.
  std::vector<SparseVector> rows;
  for (const auto& t : g.terms()) {
    Vector r(n);
    r[t.k] += 1;
    r[t.i] -= 1;
    r[t.j] -= 1;
    rows.push_back(to_sparse(r));
  }
  const Subspace s = nullspace(rows, n);
  TorusReport rep;
  rep.diagonal_torus_dim = s.dim();
  for (const auto& v : s.dense_basis()) rep.weight_vectors.push_back(primitive_integer(v));
  return rep;
}

bool is_complete(const LieAlgebra& g) {
  if (!center(g).is_zero()) return false;
  return derivation_space(g).space.dim() == inner_derivations(g).dim();
}

std::size_t h2_adjoint_dim(const LieAlgebra& g, std::size_t bound) {
  if (g.dim() > bound)
    throw ResourceError("H²(g,g) refused: dim " + std::to_string(g.dim()) + " exceeds bound " + std::to_string(bound) +
                        "; the cochain system has dim·dim(dim−1)/2 unknowns and dim·C(dim,3) equations");
  Z2Options opt;
  opt.with_basis = false;
  return adjoint_z2(g, opt).h2_dim;
}

bool raises_index(const RatMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = i; j < d.cols(); ++j)
      if (sgn(d(i, j)) != 0) return false;
  return true;
}

}  // namespace cnlie
