#include "cnlie/families.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>

#include "cnlie/error.hpp"

namespace cnlie {

namespace {

// Collects brackets with 1-based indices as they appear in the formulas.
struct Law {
  std::vector<BracketTerm> terms;
  void add(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
    if (i < j)
      terms.push_back({i - 1, j - 1, k - 1, c});
    else
      terms.push_back({j - 1, i - 1, k - 1, -c});
  }
};

int sign_pow(std::size_t j) { return j % 2 == 0 ? 1 : -1; }

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

Law g4_law(std::size_t m) {
  Law law;
  for (std::size_t j = 3; j <= 2 * m; ++j) law.add(1, j - 1, j, 1);
  for (std::size_t j = 2; j <= m; ++j) law.add(j, 2 * m + 1 - j, 2 * m + 1, sign_pow(j));
  return law;
}

Law g41_law(std::size_t m) {
  Law law = g4_law(m);
  law.add(1, 2 * m + 1, 2 * m + 2, 1);
  for (std::size_t j = 2; j <= m; ++j)
    law.add(j, 2 * m + 2 - j, 2 * m + 2, Rational(sign_pow(j) * static_cast<long>(m + 1 - j)));
  return law;
}

std::vector<std::string> labels_with_torus(std::size_t nil_dim) {
  std::vector<std::string> l;
  for (std::size_t i = 1; i <= nil_dim; ++i) l.push_back("X" + std::to_string(i));
  l.push_back("T");
  return l;
}

// θ is the last basis vector: dω_i = w_i θ∧ω_i, i.e. [θ, X_i] = w_i X_i.
LieAlgebra with_torus(Law law, const std::vector<long>& w) {
  const std::size_t nil = w.size();
  for (std::size_t i = 1; i <= nil; ++i) law.add(nil + 1, i, i, w[i - 1]);
  return LieAlgebra(nil + 1, law.terms, labels_with_torus(nil));
}

}  // namespace

LieAlgebra model_L(std::size_t n) {
  require(n >= 3, "n ≥ 3 required");
  Law law;
  for (std::size_t i = 2; i <= n; ++i) law.add(1, i, i + 1, 1);
  return LieAlgebra(n + 1, law.terms);
}

LieAlgebra model_Q(std::size_t m) {
  require(m >= 3, "m ≥ 3 required");
  Law law;
  for (std::size_t i = 2; i <= 2 * m - 1; ++i) law.add(1, i, i + 1, 1);
  for (std::size_t j = 2; j <= m; ++j) law.add(j, 2 * m + 1 - j, 2 * m, sign_pow(j));
  return LieAlgebra(2 * m, law.terms);
}

LieAlgebra g4(std::size_t m) {
  require(m >= 4, "m ≥ 4 required");
  return LieAlgebra(2 * m + 1, g4_law(m).terms);
}

LieAlgebra g41(std::size_t m) {
  require(m >= 4, "m ≥ 4 required");
  return LieAlgebra(2 * m + 2, g41_law(m).terms);
}

LieAlgebra e1(std::size_t m) {
  require(m >= 4, "m ≥ 4 required");
  Law law = g41_law(m);
  law.add(2, 3, 2 * m, 1);
  return LieAlgebra(2 * m + 2, law.terms);
}

std::vector<long> r4k_weights(std::size_t m, std::size_t k) {
  const long K = static_cast<long>(k), M = static_cast<long>(m);
  std::vector<long> w{1, K + 1};
  for (long j = 3; j <= 2 * M; ++j) w.push_back(K + j - 1);
  w.push_back(2 * K + 2 * M - 1);
  return w;
}

LieAlgebra r4k(std::size_t m, std::size_t k) {
  require(m >= 4, "m ≥ 4 required");
  require(k >= 1 && k <= 2 * m - 4, "1 ≤ k ≤ 2m−4 required");
  Law law = g4_law(m);
  // ψ_{2,k}(X2, X_j) = X_{1+j+k}, 3 ≤ j ≤ 2m−1−k
  for (std::size_t j = 3; j + k + 1 <= 2 * m; ++j) law.add(2, j, 1 + j + k, 1);
  return with_torus(law, r4k_weights(m, k));
}

std::vector<long> r41_weights(std::size_t m) {
  const long M = static_cast<long>(m);
  std::vector<long> w{1, 2 * M - 4};
  for (long j = 3; j <= 2 * M - 2; ++j) w.push_back(2 * M - 6 + j);
  for (long x : {4 * M - 7, 4 * M - 6, 6 * M - 11, 6 * M - 10}) w.push_back(x);
  return w;
}

LieAlgebra r41(std::size_t m) {
  require(m >= 4, "m ≥ 4 required");
  Law law = g41_law(m);
  law.add(2, 3, 2 * m - 1, 1);
  law.add(2, 4, 2 * m, 1);
  return with_torus(law, r41_weights(m));
}

LieAlgebra g7() {
  Law law;
  for (std::size_t i = 2; i <= 5; ++i) law.add(1, i, i + 1, 1);
  law.add(2, 3, 7, 1);
  return LieAlgebra(7, law.terms);
}

// ---------------------------------------------------------------- g4 data

std::vector<NamedMap> g4_derivation_basis(std::size_t m) {
  require(m >= 4, "m ≥ 4 required");
  const std::size_t n = 2 * m + 1;
  const LieAlgebra g = g4(m);
  std::vector<NamedMap> out;
  auto map_of = [n](std::initializer_list<std::tuple<std::size_t, std::size_t, long>> images) {
    RatMatrix f(n, n);
    for (const auto& [from, to, c] : images) f(to - 1, from - 1) += c;  // 1-based X_from ↦ c X_to
    return f;
  };
  for (std::size_t i = 1; i <= 2 * m - 1; ++i) out.push_back({"ad X" + std::to_string(i), g.ad(i - 1)});

  RatMatrix f11(n, n);
  f11(0, 0) = 1;
  for (std::size_t j = 3; j <= 2 * m; ++j) f11(j - 1, j - 1) = static_cast<long>(j) - 2;
  f11(n - 1, n - 1) = 2 * static_cast<long>(m) - 3;
  out.push_back({"f_1^1", f11});

  out.push_back({"f_1^2", map_of({{1, 2, 1}, {2 * m, 2 * m + 1, 1}})});
  out.push_back({"f_1^" + std::to_string(2 * m + 1), map_of({{1, 2 * m + 1, 1}})});

  RatMatrix f22(n, n);
  for (std::size_t j = 2; j <= 2 * m; ++j) f22(j - 1, j - 1) = 1;
  f22(n - 1, n - 1) = 2;
  out.push_back({"f_2^2", f22});

  for (std::size_t j = 1; j <= 2 * m - 4; ++j) {
    RatMatrix f(n, n);
    for (std::size_t k = 2; k + j + 1 <= 2 * m; ++k) f(k + j, k - 1) = 1;
    out.push_back({"f_2^" + std::to_string(3 + j), f});
  }
  out.push_back({"f_2^" + std::to_string(2 * m), map_of({{2, 2 * m, 1}})});
  out.push_back({"f_2^" + std::to_string(2 * m + 1), map_of({{2, 2 * m + 1, 1}})});
  return out;
}

RatMatrix g4_f12_displayed(std::size_t m) {
  const std::size_t n = 2 * m + 1;
  RatMatrix f(n, n);
  f(1, 0) = 1;
  f(n - 1, 1) = 1;
  return f;
}

PropertyP g4_property(std::size_t m) { return PropertyP{{2 * m}}; }

ScalarCochain2 canonical_L_cocycle(std::size_t m) {
  ScalarCochain2 phi(2 * m);
  for (std::size_t j = 2; j <= m; ++j) phi.set(j - 1, 2 * m - j, sign_pow(j));
  return phi;
}

ScalarCochain2 g41_cocycle(std::size_t m) {
  ScalarCochain2 phi(2 * m + 1);
  phi.set(0, 2 * m, 1);
  for (std::size_t j = 2; j <= m; ++j)
    phi.set(j - 1, 2 * m + 1 - j, Rational(sign_pow(j) * static_cast<long>(m + 1 - j)));
  return phi;
}

// ---------------------------------------------------------------- specs

namespace {

std::size_t parse_count(std::string_view key, std::string_view v) {
  std::size_t out = 0;
  const auto* end = v.data() + v.size();
  auto [p, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || p != end || v.empty())
    throw ParseError("parameter " + std::string(key) + " must be a non-negative integer, got '" + std::string(v) + "'");
  return out;
}

std::map<std::string, std::string> parse_params(std::string_view body) {
  std::map<std::string, std::string> kv;
  while (!body.empty()) {
    const auto comma = body.find(',');
    const std::string_view item = body.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) throw ParseError("expected key=value, got '" + std::string(item) + "'");
    const std::string key(item.substr(0, eq));
    if (!kv.emplace(key, std::string(item.substr(eq + 1))).second) throw ParseError("duplicate parameter " + key);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return kv;
}

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

const std::map<std::string, Family>& family_names() {
  static const std::map<std::string, Family> names{{"L", Family::L},     {"Q", Family::Q},     {"g4", Family::g4},
                                                   {"g41", Family::g41}, {"r4k", Family::r4k}, {"r41", Family::r41},
                                                   {"e1", Family::e1}};
  return names;
}

}  // namespace

CocycleTerm parse_cocycle_term(std::string_view text) {
  const std::string s = strip(text);
  const auto colon = s.find(':');
  if (colon == std::string::npos || s.substr(0, colon) != "psi")
    throw ParseError("cocycle term must look like psi:k=2,r=3,c=1");
  auto kv = parse_params(std::string_view(s).substr(colon + 1));
  CocycleTerm t;
  for (const auto& [key, v] : kv) {
    if (key == "k")
      t.k = parse_count(key, v);
    else if (key == "r")
      t.r = parse_count(key, v);
    else if (key == "c")
      t.c = parse_rational(v);
    else
      throw ParseError("unknown cocycle parameter " + key);
  }
  if (!kv.count("k") || !kv.count("r")) throw ParseError("cocycle term needs k and r");
  return t;
}

FamilySpec parse_family_spec(std::string_view text) {
  const std::string s = strip(text);
  // Optional cocycle terms follow the family after ';'.
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto semi = s.find(';', start);
    parts.push_back(s.substr(start, semi == std::string::npos ? std::string::npos : semi - start));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  const std::string& head = parts.front();
  const auto colon = head.find(':');
  const std::string name = head.substr(0, colon);
  const auto it = family_names().find(name);
  if (it == family_names().end()) throw ParseError("unknown family '" + name + "' (expected L, Q, g4, g41, r4k, r41, e1)");
  FamilySpec spec;
  spec.family = it->second;
  auto kv = parse_params(colon == std::string::npos ? std::string_view{} : std::string_view(head).substr(colon + 1));
  const std::string size_key = spec.family == Family::L ? "n" : "m";
  for (const auto& [key, v] : kv) {
    if (key == size_key)
      spec.m = parse_count(key, v);
    else if (key == "k" && spec.family == Family::r4k)
      spec.k = parse_count(key, v);
    else
      throw ParseError("unknown parameter " + key + " for family " + name);
  }
  if (!kv.count(size_key)) throw ParseError("parameter " + size_key + " missing for family " + name);
  if (spec.family == Family::r4k && !spec.k) throw ParseError("parameter k missing for family r4k");
  for (std::size_t p = 1; p < parts.size(); ++p) spec.extra.push_back(parse_cocycle_term(parts[p]));
  validate(spec);
  return spec;
}

void validate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::L:
      require(spec.m >= 3, "n ≥ 3 required");
      break;
    case Family::Q:
      require(spec.m >= 3, "m ≥ 3 required");
      break;
    case Family::r4k:
      require(spec.m >= 4, "m ≥ 4 required");
      require(spec.k && *spec.k >= 1 && *spec.k <= 2 * spec.m - 4, "1 ≤ k ≤ 2m−4 required");
      break;
    default:
      require(spec.m >= 4, "m ≥ 4 required");
  }
  if (!spec.extra.empty() && spec.family != Family::g4) throw ParameterError("cocycle terms apply to g4 only");
  for (const auto& t : spec.extra) (void)psi_family(spec.m, t.k, t.r);  // range check
}

std::string to_string(const FamilySpec& spec) {
  std::string name;
  for (const auto& [n, f] : family_names())
    if (f == spec.family) name = n;
  std::string s = name + ":" + (spec.family == Family::L ? "n=" : "m=") + std::to_string(spec.m);
  if (spec.k) s += ",k=" + std::to_string(*spec.k);
  for (const auto& t : spec.extra)
    s += ";psi:k=" + std::to_string(t.k) + ",r=" + std::to_string(t.r) + ",c=" + cnlie::to_string(t.c);
  return s;
}

LieAlgebra build(const FamilySpec& spec) {
  validate(spec);
  switch (spec.family) {
    case Family::L:
      return model_L(spec.m);
    case Family::Q:
      return model_Q(spec.m);
    case Family::g41:
      return g41(spec.m);
    case Family::r4k:
      return r4k(spec.m, *spec.k);
    case Family::r41:
      return r41(spec.m);
    case Family::e1:
      return e1(spec.m);
    case Family::g4:
      break;
  }
  LieAlgebra g = g4(spec.m);
  if (spec.extra.empty()) return g;
  Cochain2 psi(g.dim());
  for (const auto& t : spec.extra) psi = psi + psi_family(spec.m, t.k, t.r) * t.c;
  return add_cochain(g, psi);
}

// ---------------------------------------------------------------- operators

LieAlgebra add_cochain(const LieAlgebra& g, const Cochain2& psi) {
  if (psi.dim() != g.dim()) throw DimensionError("cochain dimension differs from algebra");
  auto terms = g.terms();
  for (const auto& t : psi.terms()) terms.push_back(t);
  return LieAlgebra(g.dim(), terms, g.labels());
}

bool is_linearly_expandable(const LieAlgebra& g, const Cochain2& psi) { return is_lie_algebra(add_cochain(g, psi)); }

NotExpandable::NotExpandable(std::vector<JacobiViolation> v)
    : Error("cochain is not linearly expandable: " + std::to_string(v.size()) + " Jacobi violations"),
      violations_(std::move(v)) {}

LieAlgebra deform(const LieAlgebra& g, const Cochain2& psi) {
  LieAlgebra h = add_cochain(g, psi);
  auto bad = jacobi_defect(h);
  if (!bad.empty()) throw NotExpandable(std::move(bad));
  return h;
}

LieAlgebra central_extension(const LieAlgebra& g, const ScalarCochain2& phi) {
  const std::size_t n = g.dim();
  if (phi.dim() != n) throw DimensionError("cochain dimension differs from algebra");
  if (!is_scalar_cocycle(g, phi)) throw ParameterError("central extension requires a scalar 2-cocycle");
  auto terms = g.terms();
  for (const auto& [ij, c] : phi.terms()) terms.push_back({ij.first, ij.second, n, c});
  auto labels = g.labels();
  labels.push_back("X" + std::to_string(n + 1));
  return LieAlgebra(n + 1, terms, labels);
}

Cochain2 prolong_by_zeros(const Cochain2& psi, std::size_t new_dim) {
  if (new_dim < psi.dim()) throw DimensionError("prolongation cannot shrink the algebra");
  Cochain2 out(new_dim);
  for (const auto& t : psi.terms()) out.set(t.i, t.j, t.k, t.c);
  return out;
}

// ---------------------------------------------------------------- diagonal maps

namespace {

// Prime factorization by trial division; nullopt if a large cofactor is composite.
std::optional<std::map<Integer, long>> factor(Integer x) {
  std::map<Integer, long> f;
  if (x < 0) x = -x;
  for (Integer p = 2; p * p <= x && p < 1000000; ++p)
    while (x % p == 0) {
      ++f[p];
      x /= p;
    }
  if (x > 1) {
    if (mpz_probab_prime_p(x.get_mpz_t(), 30) == 0) return std::nullopt;
    ++f[x];
  }
  return f;
}

// Solve A x = b over GF(2); rows are bitsets as vectors.
std::optional<std::vector<int>> solve_gf2(std::vector<std::vector<int>> a, std::vector<int> b, std::size_t n) {
  std::vector<std::size_t> where(n, SIZE_MAX);
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && !a[p][c]) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    std::swap(b[p], b[row]);
    for (std::size_t r = 0; r < a.size(); ++r)
      if (r != row && a[r][c]) {
        for (std::size_t j = 0; j < n; ++j) a[r][j] ^= a[row][j];
        b[r] ^= b[row];
      }
    where[c] = row++;
  }
  for (std::size_t r = row; r < a.size(); ++r)
    if (b[r]) return std::nullopt;
  std::vector<int> x(n, 0);
  for (std::size_t c = 0; c < n; ++c)
    if (where[c] != SIZE_MAX) x[c] = b[where[c]];
  return x;
}

}  // namespace

std::optional<RatMatrix> diagonal_equivalence(const LieAlgebra& g, const LieAlgebra& h) {
  const std::size_t n = g.dim();
  if (h.dim() != n) return std::nullopt;
  // λ_k a = λ_i λ_j b for every (i < j, k), with a, b the constants of g and h.
  struct Rel {
    std::size_t i, j, k;
    Rational ratio;  // b / a = λ_k / (λ_i λ_j)
  };
  std::vector<Rel> rels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational a = g.coeff(i, j, k), b = h.coeff(i, j, k);
        if (sgn(a) == 0 && sgn(b) == 0) continue;
        if (sgn(a) == 0 || sgn(b) == 0) return std::nullopt;
        rels.push_back({i, j, k, b / a});
      }

  std::map<Integer, std::vector<long>> valuation;  // prime -> exponent per relation
  std::vector<int> sign_bits;
  for (std::size_t r = 0; r < rels.size(); ++r) {
    const auto fn = factor(rels[r].ratio.get_num());
    const auto fd = factor(rels[r].ratio.get_den());
    if (!fn || !fd) return std::nullopt;
    for (const auto& [p, e] : *fn) valuation.try_emplace(p, rels.size(), 0).first->second[r] += e;
    for (const auto& [p, e] : *fd) valuation.try_emplace(p, rels.size(), 0).first->second[r] -= e;
    sign_bits.push_back(sgn(rels[r].ratio) < 0 ? 1 : 0);
  }

  std::vector<SparseVector> rows;
  std::vector<std::vector<int>> rows2;
  for (const auto& rel : rels) {
    Vector r(n);
    r[rel.k] += 1;
    r[rel.i] -= 1;
    r[rel.j] -= 1;
    rows.push_back(to_sparse(r));
    std::vector<int> r2(n, 0);
    r2[rel.k] ^= 1;
    r2[rel.i] ^= 1;
    r2[rel.j] ^= 1;
    rows2.push_back(r2);
  }
  const auto signs = solve_gf2(rows2, sign_bits, n);
  if (!signs) return std::nullopt;

  Vector lambda(n, Rational(1));
  for (std::size_t i = 0; i < n; ++i)
    if ((*signs)[i]) lambda[i] = -1;
  RatMatrix m(rels.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) m(r, c) = v;
  for (const auto& [p, e] : valuation) {
    Vector rhs(e.begin(), e.end());
    const auto x = solve(m, rhs);
    if (!x) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) {
      if ((*x)[i].get_den() != 1) return std::nullopt;  // inconclusive: no integral choice found
      const long ex = (*x)[i].get_num().get_si();
      Integer pw;
      mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(ex < 0 ? -ex : ex));
      lambda[i] *= ex < 0 ? Rational(Integer(1), pw) : Rational(pw);
    }
  }
  for (const auto& rel : rels)
    if (lambda[rel.k] != rel.ratio * lambda[rel.i] * lambda[rel.j]) return std::nullopt;
  return RatMatrix::diagonal(lambda);
}

}  // namespace cnlie
