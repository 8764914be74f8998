#include "cnlie/invariants.hpp"

#include <algorithm>
#include <random>

#include "cnlie/error.hpp"

namespace cnlie {

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  Echelon e(g.dim());
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) e.insert(g.bracket(x, y));
  return Subspace::from_echelon(e);
}

SeriesReport central_series(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  SeriesReport r;
  const Subspace all = Subspace::full(n);

  r.descending.push_back(all);
  while (!r.descending.back().is_zero()) {
    Subspace next = bracket_span(g, r.descending.back(), all);
    if (next == r.descending.back()) break;  // stabilized: not nilpotent
    r.descending.push_back(std::move(next));
  }
  if (r.descending.back().is_zero()) r.nilindex = r.descending.size() - 1;

  r.ascending.push_back(Subspace(n));
  while (r.ascending.back().dim() < n) {
    // X ∈ C_q iff <a, [X, X_j]> = 0 for every j and every a ⊥ C_{q-1}.
    const Subspace ann = r.ascending.back().annihilator();
    std::vector<SparseVector> rows;
    for (const auto& a : ann.basis())
      for (std::size_t j = 0; j < n; ++j) {
        SparseVector row;
        for (std::size_t i = 0; i < n; ++i) {
          Rational s;
          auto ia = a.begin();
          for (const auto& [k, c] : g.bracket(i, j)) {
            while (ia != a.end() && ia->first < k) ++ia;
            if (ia != a.end() && ia->first == k) s += c * ia->second;
          }
          if (sgn(s) != 0) row.emplace_back(i, s);
        }
        if (!row.empty()) rows.push_back(std::move(row));
      }
    Subspace next = nullspace(rows, n);
    if (next == r.ascending.back()) break;
    r.ascending.push_back(std::move(next));
  }
  return r;
}

std::vector<Subspace> derived_series(const LieAlgebra& g) {
  std::vector<Subspace> out{Subspace::full(g.dim())};
  while (!out.back().is_zero()) {
    Subspace next = bracket_span(g, out.back(), out.back());
    if (next == out.back()) break;
    out.push_back(std::move(next));
  }
  return out;
}

bool is_nilpotent(const LieAlgebra& g) { return central_series(g).nilindex.has_value(); }
bool is_solvable(const LieAlgebra& g) { return derived_series(g).back().is_zero(); }

Subspace center(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  // Rows indexed by (j, k): Σ_i x_i C^k_{ij} = 0.
  std::vector<SparseVector> rows(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : g.bracket(i, j)) rows[j * n + k].emplace_back(i, c);
  return nullspace(rows, n);
}

bool is_abelian(const LieAlgebra& g, const Subspace& s) { return bracket_span(g, s, s).is_zero(); }

std::size_t abelianity_index(const LieAlgebra& g) {
  const auto series = central_series(g);
  if (!series.nilindex) throw ParameterError("abelianity index requires a nilpotent algebra");
  for (std::size_t k = 0; k < series.descending.size(); ++k)
    if (is_abelian(g, series.descending[k])) return k;
  return series.descending.size() - 1;
}

bool is_type_Qn(const LieAlgebra& g) {
  const auto p = central_series(g).nilindex;
  if (!p) throw ParameterError("type Q_n requires a nilpotent algebra");
  return abelianity_index(g) == *p / 2;
}

CharSequence jordan_type(const RatMatrix& nm) {
  const std::size_t n = nm.rows();
  std::vector<std::size_t> ranks{n};
  RatMatrix power = RatMatrix::identity(n);
  while (ranks.back() > 0) {
    power = power * nm;
    const std::size_t r = rank(power);
    if (r == ranks.back()) throw ParameterError("matrix is not nilpotent");
    ranks.push_back(r);
  }
  // at_least[s] = rank(N^{s-1}) - rank(N^s) blocks of size >= s
  CharSequence blocks;
  for (std::size_t s = 1; s < ranks.size(); ++s) {
    const std::size_t at_least = ranks[s - 1] - ranks[s];
    const std::size_t at_least_next = s + 1 < ranks.size() ? ranks[s] - ranks[s + 1] : 0;
    for (std::size_t c = 0; c < at_least - at_least_next; ++c) blocks.push_back(s);
  }
  std::sort(blocks.rbegin(), blocks.rend());
  return blocks;
}

CharSequence characteristic_sequence(const LieAlgebra& g, std::uint64_t seed) {
  const std::size_t n = g.dim();
  const auto series = central_series(g);
  if (!series.nilindex) throw ParameterError("characteristic sequence requires a nilpotent algebra");
  const Subspace derived = series.descending.size() > 1 ? series.descending[1] : Subspace(n);

  std::vector<Element> candidates;
  std::vector<std::size_t> outside;
  for (std::size_t i = 0; i < n; ++i)
    if (!derived.contains(SparseVector{{i, Rational(1)}})) outside.push_back(i);
  for (std::size_t a : outside) candidates.push_back(basis_vector(n, a));
  for (std::size_t a = 0; a < outside.size(); ++a)
    for (std::size_t b = a + 1; b < outside.size(); ++b) {
      Element x = basis_vector(n, outside[a]);
      x[outside[b]] = 1;
      candidates.push_back(std::move(x));
    }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int t = 0; t < 32; ++t) {
    Element x(n);
    for (auto& c : x) c = coeff(rng);
    if (!derived.contains(x)) candidates.push_back(std::move(x));
  }

  CharSequence best;
  for (const auto& x : candidates) best = std::max(best, jordan_type(g.ad(x)));
  if (best.empty()) best.assign(n, 1);  // n = 0 or nothing outside C^1 (only for g = 0)
  return best;
}

std::optional<Grading> natural_grading(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const auto series = central_series(g);
  if (!series.nilindex) return std::nullopt;
  const auto& C = series.descending;

  Grading gr;
  gr.weight.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const SparseVector e{{i, Rational(1)}};
    std::size_t q = 0;
    while (q + 1 < C.size() && C[q + 1].contains(e)) ++q;
    gr.weight[i] = q + 1;
  }
  // Adapted: the basis vectors of weight > q span C^q.
  for (std::size_t q = 0; q < C.size(); ++q) {
    std::vector<std::size_t> axes;
    for (std::size_t i = 0; i < n; ++i)
      if (gr.weight[i] > q) axes.push_back(i);
    if (!(Subspace::coordinate(n, axes) == C[q])) return std::nullopt;
  }
  for (const auto& t : g.terms())
    if (gr.weight[t.k] != gr.weight[t.i] + gr.weight[t.j]) return std::nullopt;

  const std::size_t top = *series.nilindex;
  for (std::size_t w = 1; w <= top; ++w) {
    std::vector<std::size_t> axes;
    for (std::size_t i = 0; i < n; ++i)
      if (gr.weight[i] == w) axes.push_back(i);
    gr.blocks.push_back(Subspace::coordinate(n, axes));
  }
  return gr;
}

Filtration filtrations(const LieAlgebra& g) {
  const auto series = central_series(g);
  if (!series.nilindex) throw ParameterError("filtrations require a nilpotent algebra");
  const std::size_t p = *series.nilindex;
  Filtration f;
  for (std::size_t q = 1; q <= p; ++q) {
    f.S.push_back(series.descending[q - 1]);
    f.T.push_back(series.ascending[p + 1 - q]);
  }
  return f;
}

Subspace image(const RatMatrix& f, const Subspace& s) {
  Echelon e(f.rows());
  for (const auto& v : s.dense_basis()) e.insert(to_sparse(f * v));
  return Subspace::from_echelon(e);
}

bool vergne_check(const Filtration& filt, const RatMatrix& f) {
  for (std::size_t i = 0; i < filt.S.size(); ++i)
    if (!filt.T[i].contains(image(f, filt.S[i]))) return false;
  return true;
}

bool vergne_check(const LieAlgebra& g, const RatMatrix& f) { return vergne_check(filtrations(g), f); }

}  // namespace cnlie
