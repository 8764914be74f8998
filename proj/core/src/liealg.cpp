#include "cnlie/liealg.hpp"

#include <algorithm>
#include <map>

#include "cnlie/error.hpp"

namespace cnlie {

Element basis_vector(std::size_t n, std::size_t i) {
  Element e(n);
  e.at(i) = 1;
  return e;
}

LieAlgebra::LieAlgebra(std::size_t dim, const std::vector<BracketTerm>& terms, std::vector<std::string> labels)
    : n_(dim), labels_(std::move(labels)), table_(dim * dim) {
  if (labels_.empty())
    for (std::size_t i = 0; i < n_; ++i) labels_.push_back("X" + std::to_string(i + 1));
  if (labels_.size() != n_) throw DimensionError("basis label count differs from dimension");

  std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Rational>> acc;
  for (const auto& t : terms) {
    if (t.i >= n_ || t.j >= n_ || t.k >= n_)
      throw ParameterError("bracket index out of range for dimension " + std::to_string(n_));
    if (t.i >= t.j) throw ParameterError("bracket terms require i < j");
    acc[{t.i, t.j}][t.k] += t.c;
  }
  for (const auto& [ij, col] : acc) {
    SparseVector v;
    for (const auto& [k, c] : col)
      if (sgn(c) != 0) v.emplace_back(k, c);
    table_[ij.first * n_ + ij.second] = v;
    table_[ij.second * n_ + ij.first] = scaled(v, -1);
  }
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return LieAlgebra(dim, {}); }

Rational LieAlgebra::coeff(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& [idx, c] : bracket(i, j))
    if (idx == k) return c;
  return 0;
}

SparseVector LieAlgebra::bracket(const SparseVector& x, const SparseVector& y) const {
  SparseVector r;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y)
      if (i != j) axpy(r, a * b, bracket(i, j));
  return r;
}

Element LieAlgebra::bracket(const Element& x, const Element& y) const {
  if (x.size() != n_ || y.size() != n_) throw DimensionError("element length differs from algebra dimension");
  return to_dense(bracket(to_sparse(x), to_sparse(y)), n_);
}

RatMatrix LieAlgebra::ad(const Element& x) const {
  if (x.size() != n_) throw DimensionError("element length differs from algebra dimension");
  RatMatrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n_; ++j)
      for (const auto& [k, c] : bracket(i, j)) m(k, j) += x[i] * c;
  }
  return m;
}

RatMatrix LieAlgebra::ad(std::size_t i) const { return ad(basis_vector(n_, i)); }

std::vector<BracketTerm> LieAlgebra::terms() const {
  std::vector<BracketTerm> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      for (const auto& [k, c] : bracket(i, j)) out.push_back({i, j, k, c});
  return out;
}

std::vector<JacobiViolation> jacobi_defect(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<JacobiViolation> bad;
  auto nested = [&](std::size_t a, std::size_t b, std::size_t c, SparseVector& acc) {
    for (const auto& [l, v] : g.bracket(a, b)) axpy(acc, v, g.bracket(l, c));
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        SparseVector acc;
        nested(i, j, k, acc);
        nested(j, k, i, acc);
        nested(k, i, j, acc);
        for (const auto& [s, v] : acc) bad.push_back({i, j, k, s, v});
      }
  return bad;
}

bool is_lie_algebra(const LieAlgebra& g) {
  // Same enumeration as jacobi_defect, stopping at the first violation.
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        SparseVector acc;
        for (const auto& [l, v] : g.bracket(i, j)) axpy(acc, v, g.bracket(l, k));
        for (const auto& [l, v] : g.bracket(j, k)) axpy(acc, v, g.bracket(l, i));
        for (const auto& [l, v] : g.bracket(k, i)) axpy(acc, v, g.bracket(l, j));
        if (!acc.empty()) return false;
      }
  return true;
}

LieAlgebra from_maurer_cartan(const MaurerCartanForm& mc, std::vector<std::string> labels) {
  if (mc.d.size() != mc.dim) throw DimensionError("one differential per coframe form required");
  std::vector<BracketTerm> terms;
  for (std::size_t k = 0; k < mc.dim; ++k)
    for (const auto& t : mc.d[k]) {
      if (t.i >= t.j) throw ParameterError("wedge terms require i < j");
      terms.push_back({t.i, t.j, k, t.c});
    }
  return LieAlgebra(mc.dim, terms, std::move(labels));
}

MaurerCartanForm to_maurer_cartan(const LieAlgebra& g) {
  MaurerCartanForm mc{g.dim(), std::vector<std::vector<MaurerCartanTerm>>(g.dim())};
  for (const auto& t : g.terms()) mc.d[t.k].push_back({t.i, t.j, t.c});
  return mc;
}

}  // namespace cnlie
