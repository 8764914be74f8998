#pragma once

// Randomized invariant checks. Each returns the number of cases run and the
// first failing case, so the same code backs the doctest property suite and
// the acceptance line.

#include <string>

#include "cnlie/cohomology.hpp"
#include "cnlie/derivations.hpp"
#include "cnlie/invariants.hpp"
#include "random.hpp"

namespace cnlie::testing {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void fail(std::size_t c, const std::string& why) {
    if (failures++ == 0) first_failure = "case " + std::to_string(c) + ": " + why;
  }
  bool ok() const { return failures == 0 && cases > 0; }
};

// rank(M) + dim ker M = cols, by Bareiss and by the sparse echelon.
inline PropertyResult rank_nullity(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"rank-nullity", 0, 0, {}};
  Rng rng(seed);
  for (std::size_t c = 0; c < cases; ++c, ++r.cases) {
    const std::size_t rows = 1 + rng.index(7), cols = 1 + rng.index(7);
    const RatMatrix m = c % 3 == 0 ? random_matrix(rng, rows, cols) : random_low_rank(rng, rows, cols);
    const std::size_t rk = rank(m);
    const Subspace ker = nullspace(m);
    if (rk + ker.dim() != cols) r.fail(c, "rank " + std::to_string(rk) + " + nullity " + std::to_string(ker.dim()));
    if (Subspace::span(cols, m.sparse_rows()).dim() != rk) r.fail(c, "echelon rank differs from Bareiss rank");
    for (const auto& v : ker.dense_basis())
      if (!is_zero(m * v)) r.fail(c, "kernel vector not annihilated");
  }
  return r;
}

// δ∘δ = 0 from maps to 3-cochains, and for scalar 1-cochains.
inline PropertyResult coboundary_squared(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"delta-squared", 0, 0, {}};
  Rng rng(seed);
  const auto pool = algebra_pool();
  for (std::size_t c = 0; c < cases; ++c, ++r.cases) {
    LieAlgebra g = pool[c % pool.size()];
    if (c % 2 == 1) g = change_basis(g, random_unimodular(rng, g.dim()));
    const RatMatrix f = random_matrix(rng, g.dim(), g.dim());
    if (!coboundary3(g, coboundary(g, f)).empty()) r.fail(c, "δδf != 0");
    if (!is_scalar_cocycle(g, scalar_coboundary(g, rng.vector(g.dim())))) r.fail(c, "scalar δδa != 0");
  }
  return r;
}

// dim(A + B) + dim(A ∩ B) = dim A + dim B.
inline PropertyResult grassmann(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"grassmann", 0, 0, {}};
  Rng rng(seed);
  for (std::size_t c = 0; c < cases; ++c, ++r.cases) {
    const std::size_t n = 2 + rng.index(7);
    std::vector<Vector> va, vb;
    for (std::size_t i = 0, k = rng.index(n + 1); i < k; ++i) va.push_back(rng.vector(n));
    for (std::size_t i = 0, k = rng.index(n + 1); i < k; ++i) vb.push_back(rng.vector(n));
    // shared directions make the intersection nontrivial
    for (std::size_t i = 0, k = rng.index(3); i < k; ++i) {
      Vector v = rng.vector(n);
      va.push_back(v);
      vb.push_back(v);
    }
    const Subspace a = Subspace::span(n, va), b = Subspace::span(n, vb);
    const auto ops = span_ops(a, b);
    if (ops.sum.dim() + ops.intersection.dim() != a.dim() + b.dim()) r.fail(c, "dimension identity");
    if (!a.contains(ops.intersection) || !b.contains(ops.intersection)) r.fail(c, "intersection not inside");
    if (!ops.sum.contains(a) || !ops.sum.contains(b)) r.fail(c, "sum does not contain operands");
    if (!(sum(a, b) == ops.sum) || !(intersection(a, b) == ops.intersection)) r.fail(c, "span_ops disagrees");
  }
  return r;
}

// Bilinearity in each slot and alternation of the bracket.
inline PropertyResult bracket_bilinear(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"bracket-bilinear-alternating", 0, 0, {}};
  Rng rng(seed);
  const auto pool = algebra_pool();
  for (std::size_t c = 0; c < cases; ++c, ++r.cases) {
    LieAlgebra g = pool[c % pool.size()];
    if (c % 3 == 0) g = change_basis(g, random_unimodular(rng, g.dim()));
    const std::size_t n = g.dim();
    const Vector x = rng.vector(n), y = rng.vector(n), z = rng.vector(n);
    const Rational a = rng.rational(), b = rng.rational();
    Vector ax_by(n);
    for (std::size_t i = 0; i < n; ++i) ax_by[i] = a * x[i] + b * y[i];
    const Vector l = g.bracket(ax_by, z), xz = g.bracket(x, z), yz = g.bracket(y, z);
    const Vector rr = g.bracket(z, ax_by), zx = g.bracket(z, x), zy = g.bracket(z, y);
    for (std::size_t i = 0; i < n; ++i) {
      if (l[i] != a * xz[i] + b * yz[i]) r.fail(c, "left linearity");
      if (rr[i] != a * zx[i] + b * zy[i]) r.fail(c, "right linearity");
      if (xz[i] != -zx[i]) r.fail(c, "antisymmetry");
    }
    if (!is_zero(g.bracket(x, x))) r.fail(c, "[x, x] != 0");
  }
  return r;
}

// f(S_i) ⊆ T_i for random derivations of g4, m = 4..6.
inline PropertyResult vergne(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"vergne-filtration", 0, 0, {}};
  Rng rng(seed);
  struct Data {
    LieAlgebra g;
    DerivationSpace der;
    Filtration filt;
  };
  std::vector<Data> data;
  for (std::size_t m = 4; m <= 6; ++m) {
    LieAlgebra g = g4(m);
    data.push_back({g, derivation_space(g), filtrations(g)});
  }
  for (std::size_t c = 0; c < cases; ++c, ++r.cases) {
    const auto& d = data[c % data.size()];
    const std::size_t n = d.g.dim();
    RatMatrix f(n, n);
    if (const std::size_t b = c / data.size(); b < d.der.basis.size()) {
      f = d.der.basis[b];  // every basis derivation first
    } else {
      for (const auto& e : d.der.basis) f = f + e * Rational(rng.integer(-3, 3));
    }
    if (!is_derivation(d.g, f)) r.fail(c, "not a derivation");
    if (!vergne_check(d.filt, f)) r.fail(c, "f(S_i) ⊄ T_i");
  }
  return r;
}

// c(g) does not depend on the basis.
inline PropertyResult charseq_invariance(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"characteristic-sequence-basis-change", 0, 0, {}};
  Rng rng(seed);
  const auto pool = nilpotent_pool();
  std::vector<CharSequence> base;
  for (const auto& g : pool) base.push_back(characteristic_sequence(g));
  for (std::size_t c = 0; c < cases; ++c, ++r.cases) {
    const std::size_t i = c % pool.size();
    const LieAlgebra h = change_basis(pool[i], random_unimodular(rng, pool[i].dim()));
    if (characteristic_sequence(h) != base[i]) r.fail(c, "sequence changed for pool algebra " + std::to_string(i));
  }
  return r;
}

inline std::vector<PropertyResult> property_suite(std::uint64_t seed = kPropertySeed, std::size_t cases = kPropertyCases) {
  return {rank_nullity(seed, cases),    coboundary_squared(seed + 1, cases), grassmann(seed + 2, cases),
          bracket_bilinear(seed + 3, cases), vergne(seed + 4, cases),       charseq_invariance(seed + 5, cases)};
}

}  // namespace cnlie::testing
