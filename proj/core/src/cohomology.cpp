#include "cnlie/cohomology.hpp"

#include <algorithm>
#include <set>

#include "cnlie/error.hpp"

namespace cnlie {

std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= j || j >= n) throw ParameterError("pair index requires i < j < n");
  // pairs (0,1..n-1), (1,2..n-1), ...
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

std::pair<std::size_t, std::size_t> pair_at(std::size_t n, std::size_t index) {
  std::size_t i = 0;
  while (index >= n - i - 1) {
    index -= n - i - 1;
    ++i;
  }
  return {i, i + 1 + index};
}

// ---------------------------------------------------------------- ScalarCochain2

ScalarCochain2 ScalarCochain2::from_coords(std::size_t n, const SparseVector& coords) {
  ScalarCochain2 phi(n);
  for (const auto& [t, c] : coords) phi.c_[pair_at(n, t)] = c;
  return phi;
}

Rational ScalarCochain2::operator()(std::size_t i, std::size_t j) const {
  if (i == j) return 0;
  const bool flip = i > j;
  auto it = c_.find(flip ? std::pair{j, i} : std::pair{i, j});
  if (it == c_.end()) return 0;
  return flip ? Rational(-it->second) : it->second;
}

void ScalarCochain2::set(std::size_t i, std::size_t j, const Rational& c) {
  if (i == j || i >= n_ || j >= n_) throw ParameterError("scalar cochain index out of range");
  const auto key = i < j ? std::pair{i, j} : std::pair{j, i};
  const Rational v = i < j ? c : Rational(-c);
  if (sgn(v) == 0)
    c_.erase(key);
  else
    c_[key] = v;
}

SparseVector ScalarCochain2::coords() const {
  SparseVector v;
  for (const auto& [ij, c] : c_) v.emplace_back(pair_index(n_, ij.first, ij.second), c);
  return v;  // lexicographic pair order = increasing pair_index
}

// ---------------------------------------------------------------- Cochain2

Cochain2 Cochain2::from_coords(std::size_t n, const SparseVector& coords) {
  Cochain2 psi(n);
  for (const auto& [t, c] : coords)
    if (sgn(c) != 0) psi.c_[t] = c;
  return psi;
}

Rational Cochain2::coeff(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j) return 0;
  const bool flip = i > j;
  auto it = c_.find(pair_index(n_, std::min(i, j), std::max(i, j)) * n_ + k);
  if (it == c_.end()) return 0;
  return flip ? Rational(-it->second) : it->second;
}

void Cochain2::set(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
  if (i == j || i >= n_ || j >= n_ || k >= n_) throw ParameterError("cochain index out of range");
  const std::size_t key = pair_index(n_, std::min(i, j), std::max(i, j)) * n_ + k;
  const Rational v = i < j ? c : Rational(-c);
  if (sgn(v) == 0)
    c_.erase(key);
  else
    c_[key] = v;
}

void Cochain2::add(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
  set(i, j, k, coeff(i, j, k) + c);
}

SparseVector Cochain2::value(std::size_t i, std::size_t j) const {
  if (i == j) return {};
  const std::size_t base = pair_index(n_, std::min(i, j), std::max(i, j)) * n_;
  SparseVector v;
  for (auto it = c_.lower_bound(base); it != c_.end() && it->first < base + n_; ++it)
    v.emplace_back(it->first - base, i < j ? it->second : Rational(-it->second));
  return v;
}

std::vector<BracketTerm> Cochain2::terms() const {
  std::vector<BracketTerm> out;
  for (const auto& [t, c] : c_) {
    const auto [i, j] = pair_at(n_, t / n_);
    out.push_back({i, j, t % n_, c});
  }
  return out;
}

SparseVector Cochain2::coords() const { return SparseVector(c_.begin(), c_.end()); }

Cochain2 Cochain2::operator+(const Cochain2& o) const {
  if (o.n_ != n_) throw DimensionError("cochain dimension mismatch");
  SparseVector v = coords();
  axpy(v, 1, o.coords());
  return from_coords(n_, v);
}

Cochain2 Cochain2::operator*(const Rational& s) const { return from_coords(n_, scaled(coords(), s)); }

// ---------------------------------------------------------------- δ

namespace {

// Equations of δψ = 0 in the flat unknowns of Cochain2. var_of maps a flat
// coordinate to its column, or -1 for unknowns pinned to zero.
std::vector<SparseVector> cocycle_equations(const LieAlgebra& g, const std::vector<long>& var_of) {
  const std::size_t n = g.dim();
  std::vector<SparseVector> rows;
  auto flat = [n](std::size_t i, std::size_t j, std::size_t k) { return pair_index(n, i, j) * n + k; };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z) {
        std::map<std::size_t, std::map<long, Rational>> eq;  // output s -> column -> coefficient
        auto put = [&](std::size_t s, std::size_t coord, const Rational& c) {
          const long col = var_of[coord];
          if (col >= 0) eq[s][col] += c;
        };
        // ± [a, ψ(u, w)] with u < w
        const std::tuple<std::size_t, std::size_t, std::size_t, int> outer[] = {
            {x, y, z, 1}, {y, x, z, -1}, {z, x, y, 1}};
        for (const auto& [a, u, w, sg] : outer)
          for (std::size_t k = 0; k < n; ++k)
            for (const auto& [s, c] : g.bracket(a, k)) put(s, flat(u, w, k), sg * c);
        // ± ψ([u, w], a)
        const std::tuple<std::size_t, std::size_t, std::size_t, int> inner[] = {
            {x, y, z, -1}, {x, z, y, 1}, {y, z, x, -1}};
        for (const auto& [u, w, a, sg] : inner)
          for (const auto& [l, c] : g.bracket(u, w)) {
            if (l == a) continue;
            const int o = l < a ? 1 : -1;
            for (std::size_t s = 0; s < n; ++s) put(s, flat(std::min(l, a), std::max(l, a), s), sg * o * c);
          }
        for (auto& [s, cols] : eq) {
          SparseVector row;
          for (auto& [col, c] : cols)
            if (sgn(c) != 0) row.emplace_back(static_cast<std::size_t>(col), c);
          if (!row.empty()) rows.push_back(std::move(row));
        }
      }
  return rows;
}

std::vector<SparseVector> expand(const std::vector<SparseVector>& compressed, const std::vector<std::size_t>& coord_of) {
  std::vector<SparseVector> out;
  for (const auto& v : compressed) {
    SparseVector w;
    for (const auto& [c, x] : v) w.emplace_back(coord_of[c], x);
    std::sort(w.begin(), w.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.push_back(std::move(w));
  }
  return out;
}

// Cocycles supported on the coordinates where mask is true; canonical basis.
std::vector<SparseVector> cocycles_on(const LieAlgebra& g, const std::vector<bool>& mask) {
  std::vector<long> var_of(mask.size(), -1);
  std::vector<std::size_t> coord_of;
  for (std::size_t t = 0; t < mask.size(); ++t)
    if (mask[t]) {
      var_of[t] = static_cast<long>(coord_of.size());
      coord_of.push_back(t);
    }
  if (coord_of.empty()) return {};
  const auto rows = cocycle_equations(g, var_of);
  const Subspace z = nullspace(rows, coord_of.size());
  return Subspace::span(mask.size(), expand(z.basis(), coord_of)).basis();
}

RatMatrix elementary(std::size_t n, std::size_t a, std::size_t b) {
  RatMatrix e(n, n);
  e(a, b) = 1;
  return e;
}

// dim of span(vs) ∩ {coordinates outside mask vanish}
std::size_t dim_in_mask(const std::vector<SparseVector>& vs, const std::vector<bool>& mask) {
  if (vs.empty()) return 0;
  // Combination coefficients x with Σ x_r v_r vanishing off the mask.
  std::map<std::size_t, SparseVector> forbidden;  // coordinate -> row over r
  for (std::size_t r = 0; r < vs.size(); ++r)
    for (const auto& [c, x] : vs[r])
      if (!mask[c]) forbidden[c].emplace_back(r, x);
  std::vector<SparseVector> rows;
  for (auto& kv : forbidden) rows.push_back(std::move(kv.second));
  const Subspace combos = nullspace(rows, vs.size());
  Echelon e(mask.size());
  for (const auto& x : combos.basis()) {
    SparseVector v;
    for (const auto& [r, a] : x) axpy(v, a, vs[r]);
    e.insert(std::move(v));
  }
  return e.rank();
}

}  // namespace

SparseVector coboundary3(const LieAlgebra& g, const Cochain2& psi) {
  const std::size_t n = g.dim();
  if (psi.dim() != n) throw DimensionError("cochain dimension differs from algebra");
  SparseVector out;
  std::size_t triple = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z, ++triple) {
        SparseVector acc;
        auto outer = [&](std::size_t a, const SparseVector& v, int sg) {
          for (const auto& [k, c] : v) axpy(acc, sg * c, g.bracket(a, k));
        };
        auto inner = [&](const SparseVector& br, std::size_t a, int sg) {
          for (const auto& [l, c] : br) axpy(acc, sg * c, psi.value(l, a));
        };
        outer(x, psi.value(y, z), 1);
        outer(y, psi.value(x, z), -1);
        outer(z, psi.value(x, y), 1);
        inner(g.bracket(x, y), z, -1);
        inner(g.bracket(x, z), y, 1);
        inner(g.bracket(y, z), x, -1);
        for (const auto& [s, c] : acc) out.emplace_back(triple * n + s, c);
      }
  return out;
}

bool is_cocycle(const LieAlgebra& g, const Cochain2& psi) { return coboundary3(g, psi).empty(); }

Cochain2 coboundary(const LieAlgebra& g, const RatMatrix& f) {
  const std::size_t n = g.dim();
  if (f.rows() != n || f.cols() != n) throw DimensionError("linear map shape differs from algebra");
  const auto fs = f.transpose().sparse_rows();  // fs[j] = f(X_j)
  Cochain2 out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      SparseVector v = g.bracket(SparseVector{{i, Rational(1)}}, fs[j]);
      axpy(v, -1, g.bracket(SparseVector{{j, Rational(1)}}, fs[i]));
      for (const auto& [l, c] : g.bracket(i, j)) axpy(v, -c, fs[l]);
      for (const auto& [k, c] : v) out.set(i, j, k, c);
    }
  return out;
}

long cochain_weight(const Grading& gr, std::size_t i, std::size_t j, std::size_t k) {
  return static_cast<long>(gr.weight[k]) - static_cast<long>(gr.weight[i]) - static_cast<long>(gr.weight[j]);
}

std::vector<Cochain2> z2_weight_basis(const LieAlgebra& g, const Grading& gr, long weight, const std::vector<bool>* allowed) {
  const std::size_t n = g.dim();
  const std::size_t N = pair_count(n) * n;
  std::vector<bool> mask(N, false);
  for (std::size_t t = 0; t < N; ++t) {
    const auto [i, j] = pair_at(n, t / n);
    mask[t] = cochain_weight(gr, i, j, t % n) == weight && (!allowed || (*allowed)[t]);
  }
  std::vector<Cochain2> out;
  for (const auto& v : cocycles_on(g, mask)) out.push_back(Cochain2::from_coords(n, v));
  return out;
}

std::vector<std::size_t> property_p_killed_arguments(const LieAlgebra& g, const PropertyP& p) {
  const std::size_t n = g.dim();
  for (auto t : p.targets)
    if (t >= n) throw ParameterError("property (P) target index out of range");
  const Subspace targets = Subspace::coordinate(n, p.targets);
  std::vector<std::size_t> killed;
  for (std::size_t i = 0; i < n; ++i) {
    const Subspace im = Subspace::span(n, g.ad(i).transpose().sparse_rows());
    if (!im.contains(targets)) killed.push_back(i);
  }
  return killed;
}

bool property_P(const LieAlgebra& g, const Cochain2& psi, const PropertyP& p) {
  if (!natural_grading(g)) throw ParameterError("property (P) requires a grading of the algebra");
  const std::size_t n = g.dim();
  for (auto i : property_p_killed_arguments(g, p))
    for (std::size_t j = 0; j < n; ++j)
      if (!psi.value(i, j).empty()) return false;
  std::vector<SparseVector> values;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) values.push_back(psi.value(i, j));
  const Subspace im = Subspace::span(n, values);
  return intersection(im, Subspace::coordinate(n, p.targets)).is_zero();
}

CohomologyReport adjoint_z2(const LieAlgebra& g, const Z2Options& opt) {
  const std::size_t n = g.dim();
  const std::size_t N = pair_count(n) * n;
  CohomologyReport rep;
  const auto gr = natural_grading(g);
  if (opt.restricted && !gr) throw ParameterError("restricted cohomology requires a grading of the algebra");

  std::vector<bool> base(N, true);
  if (opt.restricted) {
    std::vector<bool> killed(n, false), target(n, false);
    for (auto i : property_p_killed_arguments(g, opt.property)) killed[i] = true;
    for (auto t : opt.property.targets) target[t] = true;
    for (std::size_t t = 0; t < N; ++t) {
      const auto [i, j] = pair_at(n, t / n);
      const std::size_t k = t % n;
      base[t] = !killed[i] && !killed[j] && !target[k] && cochain_weight(*gr, i, j, k) >= opt.min_weight;
    }
  }

  // Coboundaries δE_ab, E_ab sending X_b to X_a.
  std::vector<SparseVector> cob;
  std::vector<long> cob_weight;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      SparseVector v = coboundary(g, elementary(n, a, b)).coords();
      if (v.empty()) continue;
      cob.push_back(std::move(v));
      cob_weight.push_back(gr ? static_cast<long>(gr->weight[a]) - static_cast<long>(gr->weight[b]) : 0);
    }

  if (!gr) {
    const auto z = cocycles_on(g, base);
    rep.z2_dim = z.size();
    rep.b2_dim = Subspace::span(N, cob).dim();
    rep.h2_dim = rep.z2_dim - rep.b2_dim;
    if (opt.with_basis)
      for (const auto& v : z) rep.basis.push_back(Cochain2::from_coords(n, v));
    return rep;
  }

  std::set<long> weights;
  for (std::size_t t = 0; t < N; ++t)
    if (base[t]) {
      const auto [i, j] = pair_at(n, t / n);
      weights.insert(cochain_weight(*gr, i, j, t % n));
    }
  for (long w : weights) {
    std::vector<bool> mask(N);
    for (std::size_t t = 0; t < N; ++t) {
      const auto [i, j] = pair_at(n, t / n);
      mask[t] = base[t] && cochain_weight(*gr, i, j, t % n) == w;
    }
    const auto z = cocycles_on(g, mask);
    std::vector<SparseVector> bw;
    for (std::size_t r = 0; r < cob.size(); ++r)
      if (cob_weight[r] == w) bw.push_back(cob[r]);
    const std::size_t bdim = dim_in_mask(bw, mask);
    if (!z.empty()) rep.weight_profile[w] = z.size();
    if (z.size() > bdim) rep.h2_weight_profile[w] = z.size() - bdim;
    rep.z2_dim += z.size();
    rep.b2_dim += bdim;
    if (opt.with_basis)
      for (const auto& v : z) rep.basis.push_back(Cochain2::from_coords(n, v));
  }
  rep.h2_dim = rep.z2_dim - rep.b2_dim;
  return rep;
}

Cochain2 psi_family(std::size_t m, std::size_t k, std::size_t r) {
  if (m < 4) throw ParameterError("m ≥ 4 required");
  if (r > 2 * m - 4) throw ParameterError("r ≤ 2m−4 required");
  if (k < 2) throw ParameterError("k ≥ 2 required");
  if (k > (2 * m - r) / 2) throw ParameterError("k ≤ ⌊(2m−r)/2⌋ required");
  const std::size_t n = 2 * m + 1;
  Cochain2 psi(n);
  // 1-based: (X_k, X_j) -> X_{k+j-1+r}
  for (std::size_t j = k + 1; j + k + r <= 2 * m + 1; ++j) psi.set(k - 1, j - 1, k + j - 2 + r, 1);
  return psi;
}

std::map<long, Cochain2> weight_decompose(const Grading& gr, const Cochain2& psi) {
  std::map<long, Cochain2> out;
  for (const auto& t : psi.terms()) {
    auto [it, fresh] = out.try_emplace(cochain_weight(gr, t.i, t.j, t.k), psi.dim());
    it->second.set(t.i, t.j, t.k, t.c);
  }
  return out;
}

Cochain2 sill_cocycle(const Grading& gr, const Cochain2& psi) {
  const auto parts = weight_decompose(gr, psi);
  if (parts.empty()) return Cochain2(psi.dim());
  return parts.rbegin()->second;
}

// ---------------------------------------------------------------- scalar

bool is_scalar_cocycle(const LieAlgebra& g, const ScalarCochain2& phi) {
  const std::size_t n = g.dim();
  if (phi.dim() != n) throw DimensionError("cochain dimension differs from algebra");
  auto eval = [&](const SparseVector& v, std::size_t z) {
    Rational s;
    for (const auto& [l, c] : v) s += c * phi(l, z);
    return s;
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z)
        if (sgn(eval(g.bracket(x, y), z) + eval(g.bracket(y, z), x) + eval(g.bracket(z, x), y)) != 0) return false;
  return true;
}

ScalarCochain2 scalar_coboundary(const LieAlgebra& g, const Vector& a) {
  const std::size_t n = g.dim();
  if (a.size() != n) throw DimensionError("functional length differs from algebra");
  ScalarCochain2 phi(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational s;
      for (const auto& [k, c] : g.bracket(i, j)) s += c * a[k];
      phi.set(i, j, -s);
    }
  return phi;
}

SparseVector wedge2(std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, Rational>>& terms) {
  SparseVector v;
  for (const auto& [i, j, c] : terms) {
    if (i == j) continue;
    const Rational s = i < j ? c : Rational(-c);
    axpy(v, s, SparseVector{{pair_index(n, std::min(i, j), std::max(i, j)), Rational(1)}});
  }
  return v;
}

ScalarH2 scalar_h2(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const std::size_t N = pair_count(n);
  ScalarH2 out;

  std::vector<SparseVector> lambda_rows(n);
  for (std::size_t t = 0; t < N; ++t) {
    const auto [i, j] = pair_at(n, t);
    for (const auto& [s, c] : g.bracket(i, j)) lambda_rows[s].emplace_back(t, c);
  }
  out.ker_lambda = nullspace(lambda_rows, N);

  std::vector<SparseVector> omega;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z) {
        std::vector<std::tuple<std::size_t, std::size_t, Rational>> terms;
        for (const auto& [l, c] : g.bracket(x, y)) terms.emplace_back(l, z, c);
        for (const auto& [l, c] : g.bracket(y, z)) terms.emplace_back(l, x, c);
        for (const auto& [l, c] : g.bracket(z, x)) terms.emplace_back(l, y, c);
        SparseVector v = wedge2(n, terms);
        if (!v.empty()) omega.push_back(std::move(v));
      }
  out.omega = Subspace::span(N, omega);

  // Work in reversed coordinates so pivots prefer the largest monomials.
  auto rev = [N](const SparseVector& v) {
    SparseVector r;
    for (auto it = v.rbegin(); it != v.rend(); ++it) r.emplace_back(N - 1 - it->first, it->second);
    return r;
  };
  Echelon eo(N);
  for (const auto& v : out.omega.basis()) eo.insert(rev(v));
  Echelon ek = eo;
  for (const auto& v : out.ker_lambda.basis()) ek.insert(rev(v));

  const auto piv_o = eo.pivots();
  const auto piv_k = ek.pivots();
  const auto rows_k = ek.rref();
  std::vector<bool> is_piv(N, false);
  for (auto p : piv_k) is_piv[p] = true;

  // Square basis of Λ²g: Ω rows, complement rows of Ker λ, unit vectors.
  std::vector<Vector> basis_rows;
  std::vector<std::size_t> label_rows;
  for (const auto& r : eo.rref()) basis_rows.push_back(to_dense(r, N));
  for (std::size_t r = 0; r < piv_k.size(); ++r)
    if (!std::binary_search(piv_o.begin(), piv_o.end(), piv_k[r])) {
      label_rows.push_back(basis_rows.size());
      basis_rows.push_back(to_dense(rows_k[r], N));
      out.labels.push_back(pair_at(n, N - 1 - piv_k[r]));
    }
  for (std::size_t c = 0; c < N; ++c)
    if (!is_piv[c]) basis_rows.push_back(to_dense(SparseVector{{c, Rational(1)}}, N));

  const RatMatrix M = RatMatrix::from_rows(basis_rows);
  for (std::size_t lr : label_rows) {
    Vector e(N);
    e[lr] = 1;
    const auto phi = solve(M, e);
    if (!phi) throw Error("internal: scalar H² dual basis is singular");
    out.basis.push_back(ScalarCochain2::from_coords(n, rev(to_sparse(*phi))));
  }
  out.dim = out.basis.size();
  return out;
}

std::vector<ScalarClass> scalar_partition(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& labels) {
  std::map<std::size_t, ScalarClass> by_sum;
  for (const auto& [i, j] : labels) {
    const std::size_t s = i + j + 2;
    auto& cls = by_sum[s];
    cls.sum = s;
    cls.cocycles.emplace_back(i + 1, j + 1);
  }
  const std::size_t hi = n >= 3 ? n - 2 : 0;
  for (auto& [s, cls] : by_sum) {
    for (std::size_t t = 1; t <= hi; ++t)
      for (std::size_t k = 1; k <= hi; ++k) {
        if (2 * t + 1 + k == s) cls.labels.push_back({Rational(t), k});
        if (t % 2 == 1 && t + 1 + k == s) {
          Rational half(t, 2);
          half.canonicalize();
          cls.labels.push_back({half, k});
        }
      }
    std::sort(cls.labels.begin(), cls.labels.end());
    std::sort(cls.cocycles.begin(), cls.cocycles.end());
  }
  std::vector<ScalarClass> out;
  for (auto& kv : by_sum) out.push_back(std::move(kv.second));
  return out;
}

}  // namespace cnlie
