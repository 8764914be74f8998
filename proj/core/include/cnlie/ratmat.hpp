#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cnlie/rational.hpp"

namespace cnlie {

using Vector = std::vector<Rational>;

// Sorted by index, no stored zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

SparseVector to_sparse(const Vector& v);
Vector to_dense(const SparseVector& v, std::size_t n);

// y += a * x
void axpy(SparseVector& y, const Rational& a, const SparseVector& x);
SparseVector scaled(const SparseVector& x, const Rational& a);
bool is_zero(const Vector& v);

// Dense row-major rational matrix. A LinearMap on g is an n×n RatMatrix acting
// on column coordinate vectors: column j holds the image of basis vector j.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<Vector>& rows);
  static RatMatrix diagonal(const Vector& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  void set_column(std::size_t j, const Vector& v);

  RatMatrix operator*(const RatMatrix& o) const;
  Vector operator*(const Vector& v) const;
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix operator*(const Rational& s) const;
  bool operator==(const RatMatrix& o) const = default;

  RatMatrix transpose() const;
  bool is_zero() const;

  // Row-major flattening, the coordinate system used for spaces of matrices.
  Vector flatten() const { return a_; }
  static RatMatrix unflatten(std::size_t rows, std::size_t cols, const Vector& v);

  std::vector<SparseVector> sparse_rows() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b);

// Exact rank by fraction-free (Bareiss) elimination over the integers.
std::size_t rank(const RatMatrix& m);

// Incremental row echelon form over sparse rows. Each stored row has a unit
// leading entry at its pivot; rref() back-substitutes to the canonical form.
class Echelon {
 public:
  explicit Echelon(std::size_t cols) : cols_(cols) {}

  // Returns true when the row was independent of the rows already present.
  bool insert(SparseVector row);
  // Remainder of v after eliminating every pivot column.
  SparseVector reduce(SparseVector v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t> pivots() const;
  std::vector<SparseVector> rref() const;

 private:
  std::size_t cols_;
  std::map<std::size_t, SparseVector> rows_;
};

// Finite-dimensional subspace of Q^n held in reduced row-echelon form, so two
// subspaces are equal iff their stored bases are identical.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<SparseVector>& vs);
  static Subspace span(std::size_t ambient, const std::vector<Vector>& vs);
  static Subspace full(std::size_t ambient);
  static Subspace coordinate(std::size_t ambient, const std::vector<std::size_t>& axes);
  // Canonical basis is given by the RREF rows of an Echelon.
  static Subspace from_echelon(const Echelon& e);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<SparseVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vector> dense_basis() const;

  bool contains(const SparseVector& v) const;
  bool contains(const Vector& v) const { return contains(to_sparse(v)); }
  bool contains(const Subspace& other) const;
  // Coordinates of v in the stored basis; empty when v is not in the subspace.
  std::optional<Vector> coordinates(const Vector& v) const;

  // {w : <w, v> = 0 for all v}
  Subspace annihilator() const;

  bool operator==(const Subspace& o) const;

 private:
  std::size_t ambient_ = 0;
  std::vector<SparseVector> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);

struct SpanOps {
  Subspace sum;
  Subspace intersection;
  std::vector<bool> contains;  // membership of each query vector in A
};
SpanOps span_ops(const Subspace& a, const Subspace& b, const std::vector<Vector>& queries = {});

Subspace nullspace(const RatMatrix& m);
Subspace nullspace(const std::vector<SparseVector>& rows, std::size_t cols);

// Null space basis "one free variable at a time": for each non-pivot column f
// the vector with v_f = 1, zero on the other free columns.
std::vector<SparseVector> nullspace_basis(const Echelon& e);

// One exact solution of m x = b, or nullopt if the system is inconsistent.
std::optional<Vector> solve(const RatMatrix& m, const Vector& b);

// Primitive integer multiple (gcd 1, first nonzero entry positive).
std::vector<Integer> primitive_integer(const Vector& v);

}  // namespace cnlie
