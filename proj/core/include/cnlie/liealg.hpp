#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cnlie/ratmat.hpp"

namespace cnlie {

// Coordinates in the fixed basis X_1..X_n (0-based in code).
using Element = Vector;

Element basis_vector(std::size_t n, std::size_t i);

// [X_i, X_j] has X_k-coefficient c. Indices are 0-based with i < j.
struct BracketTerm {
  std::size_t i = 0, j = 0, k = 0;
  Rational c;
  bool operator==(const BracketTerm&) const = default;
};

// A bilinear alternating bracket given by structure constants. Jacobi is not
// enforced at construction: candidate laws are built first and tested after.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  LieAlgebra(std::size_t dim, const std::vector<BracketTerm>& terms, std::vector<std::string> labels = {});

  static LieAlgebra abelian(std::size_t dim);

  std::size_t dim() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }

  // [X_i, X_j] as a sparse coordinate vector (any i, j).
  const SparseVector& bracket(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }
  Rational coeff(std::size_t i, std::size_t j, std::size_t k) const;

  Element bracket(const Element& x, const Element& y) const;
  SparseVector bracket(const SparseVector& x, const SparseVector& y) const;

  // Column j is the image of X_j under ad(x).
  RatMatrix ad(const Element& x) const;
  RatMatrix ad(std::size_t i) const;

  // Nonzero constants with i < j, sorted by (i, j, k).
  std::vector<BracketTerm> terms() const;

  bool operator==(const LieAlgebra& o) const { return n_ == o.n_ && table_ == o.table_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::vector<SparseVector> table_;  // n*n, antisymmetric
};

struct JacobiViolation {
  std::size_t i, j, k, s;  // 0-based, i < j < k; s is the output coordinate
  Rational value;
};

// Full enumeration over i < j < k of [[X_i,X_j],X_k] + cyclic, per output s.
std::vector<JacobiViolation> jacobi_defect(const LieAlgebra& g);
bool is_lie_algebra(const LieAlgebra& g);

// dω_k = Σ c ω_i∧ω_j (i < j). Transliteration: C^k_{ij} = c, no sign.
struct MaurerCartanTerm {
  std::size_t i, j;
  Rational c;
  bool operator==(const MaurerCartanTerm&) const = default;
};
struct MaurerCartanForm {
  std::size_t dim = 0;
  std::vector<std::vector<MaurerCartanTerm>> d;  // d[k] describes dω_k
  bool operator==(const MaurerCartanForm&) const = default;
};

LieAlgebra from_maurer_cartan(const MaurerCartanForm& mc, std::vector<std::string> labels = {});
MaurerCartanForm to_maurer_cartan(const LieAlgebra& g);

}  // namespace cnlie
