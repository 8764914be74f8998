#include "cnlie/ratmat.hpp"

#include <algorithm>

#include "cnlie/error.hpp"

namespace cnlie {

SparseVector to_sparse(const Vector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) out.emplace_back(i, v[i]);
  return out;
}

Vector to_dense(const SparseVector& v, std::size_t n) {
  Vector out(n);
  for (const auto& [i, c] : v) {
    if (i >= n) throw DimensionError("sparse index out of range");
    out[i] = c;
  }
  return out;
}

void axpy(SparseVector& y, const Rational& a, const SparseVector& x) {
  if (sgn(a) == 0 || x.empty()) return;
  SparseVector out;
  out.reserve(y.size() + x.size());
  auto iy = y.begin();
  auto ix = x.begin();
  while (iy != y.end() || ix != x.end()) {
    if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
      out.push_back(std::move(*iy++));
    } else if (iy == y.end() || ix->first < iy->first) {
      out.emplace_back(ix->first, a * ix->second);
      ++ix;
    } else {
      Rational s = iy->second + a * ix->second;
      if (sgn(s) != 0) out.emplace_back(iy->first, std::move(s));
      ++iy;
      ++ix;
    }
  }
  y = std::move(out);
}

SparseVector scaled(const SparseVector& x, const Rational& a) {
  if (sgn(a) == 0) return {};
  SparseVector out = x;
  for (auto& e : out) e.second *= a;
  return out;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

// ---------------------------------------------------------------- RatMatrix

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return {};
  RatMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw DimensionError("ragged rows");
    std::copy(rows[i].begin(), rows[i].end(), m.a_.begin() + static_cast<std::ptrdiff_t>(i * m.cols_));
  }
  return m;
}

RatMatrix RatMatrix::diagonal(const Vector& d) {
  RatMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Vector RatMatrix::row(std::size_t i) const {
  return Vector(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector RatMatrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void RatMatrix::set_column(std::size_t j, const Vector& v) {
  if (v.size() != rows_) throw DimensionError("column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
  RatMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (sgn(o(k, j)) != 0) r(i, j) += a * o(k, j);
    }
  return r;
}

Vector RatMatrix::operator*(const Vector& v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
  Vector r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn((*this)(i, j)) != 0 && sgn(v[j]) != 0) r[i] += (*this)(i, j) * v[j];
  return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum shape mismatch");
  RatMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference shape mismatch");
  RatMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

RatMatrix RatMatrix::operator*(const Rational& s) const {
  RatMatrix r = *this;
  for (auto& x : r.a_) x *= s;
  return r;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool RatMatrix::is_zero() const { return cnlie::is_zero(a_); }

RatMatrix RatMatrix::unflatten(std::size_t rows, std::size_t cols, const Vector& v) {
  if (v.size() != rows * cols) throw DimensionError("flattened length mismatch");
  RatMatrix m(rows, cols);
  m.a_ = v;
  return m;
}

std::vector<SparseVector> RatMatrix::sparse_rows() const {
  std::vector<SparseVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(to_sparse(row(i)));
  return out;
}

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; }

// ---------------------------------------------------------------- Bareiss

std::size_t rank(const RatMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::vector<Integer>> a(R, std::vector<Integer>(C));
  for (std::size_t i = 0; i < R; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < C; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  // Echelon variant: skipped columns keep the entries equal to minors, so the
  // division by the previous pivot stays exact.
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = r;
    while (p < R && a[p][c] == 0) ++p;
    if (p == R) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < R; ++i) {
      for (std::size_t j = c + 1; j < C; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

// ---------------------------------------------------------------- Echelon

SparseVector Echelon::reduce(SparseVector v) const {
  // Stored rows have no entries left of their pivot, so eliminating in
  // increasing column order never disturbs entries already passed.
  std::size_t pos = 0;
  while (pos < v.size()) {
    auto it = rows_.find(v[pos].first);
    if (it == rows_.end()) {
      ++pos;
      continue;
    }
    const Rational f = v[pos].second;
    axpy(v, -f, it->second);
  }
  return v;
}

bool Echelon::insert(SparseVector row) {
  if (!row.empty() && row.back().first >= cols_) throw DimensionError("row index out of range");
  row = reduce(std::move(row));
  if (row.empty()) return false;
  const Rational lead = row.front().second;
  if (lead != 1)
    for (auto& e : row) e.second /= lead;
  rows_.emplace(row.front().first, std::move(row));
  return true;
}

std::vector<std::size_t> Echelon::pivots() const {
  std::vector<std::size_t> p;
  p.reserve(rows_.size());
  for (const auto& kv : rows_) p.push_back(kv.first);
  return p;
}

std::vector<SparseVector> Echelon::rref() const {
  std::map<std::size_t, SparseVector> done;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    SparseVector v = it->second;
    std::size_t pos = 1;  // skip own pivot
    while (pos < v.size()) {
      auto d = done.find(v[pos].first);
      if (d == done.end()) {
        ++pos;
        continue;
      }
      const Rational f = v[pos].second;
      axpy(v, -f, d->second);
    }
    done.emplace(it->first, std::move(v));
  }
  std::vector<SparseVector> out;
  out.reserve(done.size());
  for (auto& kv : done) out.push_back(std::move(kv.second));
  return out;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::from_echelon(const Echelon& e) {
  Subspace s(e.cols());
  s.basis_ = e.rref();
  s.pivots_ = e.pivots();
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<SparseVector>& vs) {
  Echelon e(ambient);
  for (const auto& v : vs) e.insert(v);
  return from_echelon(e);
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vs) {
  Echelon e(ambient);
  for (const auto& v : vs) {
    if (v.size() != ambient) throw DimensionError("vector length differs from ambient dimension");
    e.insert(to_sparse(v));
  }
  return from_echelon(e);
}

Subspace Subspace::full(std::size_t ambient) {
  std::vector<std::size_t> axes(ambient);
  for (std::size_t i = 0; i < ambient; ++i) axes[i] = i;
  return coordinate(ambient, axes);
}

Subspace Subspace::coordinate(std::size_t ambient, const std::vector<std::size_t>& axes) {
  std::vector<SparseVector> vs;
  for (std::size_t a : axes) vs.push_back({{a, Rational(1)}});
  return span(ambient, vs);
}

std::vector<Vector> Subspace::dense_basis() const {
  std::vector<Vector> out;
  for (const auto& b : basis_) out.push_back(to_dense(b, ambient_));
  return out;
}

bool Subspace::contains(const SparseVector& v) const {
  if (!v.empty() && v.back().first >= ambient_) throw DimensionError("vector outside ambient space");
  // With a fully reduced basis the candidate coefficients are the entries at
  // the pivots; membership holds iff that combination reproduces v.
  SparseVector r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t p = pivots_[i];
    auto it = std::lower_bound(r.begin(), r.end(), p, [](const auto& e, std::size_t c) { return e.first < c; });
    if (it != r.end() && it->first == p) {
      const Rational f = it->second;
      axpy(r, -f, basis_[i]);
    }
  }
  return r.empty();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("ambient dimension mismatch");
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const auto& b) { return contains(b); });
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionError("vector outside ambient space");
  Vector c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
  SparseVector r = to_sparse(v);
  for (std::size_t i = 0; i < basis_.size(); ++i) axpy(r, -c[i], basis_[i]);
  if (!r.empty()) return std::nullopt;
  return c;
}

Subspace Subspace::annihilator() const {
  Echelon e(ambient_);
  for (const auto& b : basis_) e.insert(b);
  return span(ambient_, nullspace_basis(e));
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && pivots_ == o.pivots_ && basis_ == o.basis_;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("ambient dimension mismatch");
  std::vector<SparseVector> vs = a.basis();
  vs.insert(vs.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), vs);
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("ambient dimension mismatch");
  return sum(a.annihilator(), b.annihilator()).annihilator();
}

SpanOps span_ops(const Subspace& a, const Subspace& b, const std::vector<Vector>& queries) {
  SpanOps out{sum(a, b), intersection(a, b), {}};
  for (const auto& q : queries) out.contains.push_back(a.contains(q));
  return out;
}

std::vector<SparseVector> nullspace_basis(const Echelon& e) {
  const auto rows = e.rref();
  const auto piv = e.pivots();
  std::vector<bool> is_pivot(e.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  // column f -> list of (pivot, coefficient) from rows that contain f
  std::vector<SparseVector> by_col(e.cols());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r])
      if (!is_pivot[c]) by_col[c].emplace_back(piv[r], -v);
  std::vector<SparseVector> out;
  for (std::size_t f = 0; f < e.cols(); ++f) {
    if (is_pivot[f]) continue;
    SparseVector v = by_col[f];
    v.emplace_back(f, Rational(1));
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    out.push_back(std::move(v));
  }
  return out;
}

Subspace nullspace(const std::vector<SparseVector>& rows, std::size_t cols) {
  Echelon e(cols);
  for (const auto& r : rows) e.insert(r);
  return Subspace::span(cols, nullspace_basis(e));
}

Subspace nullspace(const RatMatrix& m) { return nullspace(m.sparse_rows(), m.cols()); }

std::optional<Vector> solve(const RatMatrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionError("right-hand side length mismatch");
  const std::size_t n = m.cols();
  Echelon e(n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Vector row = m.row(i);
    row.push_back(b[i]);
    e.insert(to_sparse(row));
  }
  const auto rows = e.rref();
  const auto piv = e.pivots();
  Vector x(n);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (piv[r] == n) return std::nullopt;
    if (rows[r].back().first == n) x[piv[r]] = rows[r].back().second;
  }
  return x;
}

std::vector<Integer> primitive_integer(const Vector& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i].get_num() * (l / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g == 0) return out;
  int sign = 0;
  for (const auto& x : out)
    if (x != 0) {
      sign = sgn(x);
      break;
    }
  for (auto& x : out) x = x / g * sign;
  return out;
}

}  // namespace cnlie
