#include "cnlie_tools/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <regex>
#include <sstream>
#include <thread>

#include "cnlie/cohomology.hpp"
#include "cnlie/derivations.hpp"
#include "cnlie/error.hpp"
#include "cnlie/families.hpp"
#include "cnlie/invariants.hpp"
#include "cnlie/io.hpp"
#include "cnlie_tools/claims.hpp"

namespace cnlie::tools {

using nlohmann::ordered_json;

namespace {

// Thrown inside command handlers; carries the exit code.
struct Exit {
  int code;
  std::string message;
};

struct Output {
  std::string out_path;
  bool table = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{kUsage, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Exit{kUsage, "cannot write " + path};
  out << text;
}

// A file path, or a family spec such as "g4:m=5".
LieAlgebra load_algebra(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && arg[first] == '{') return algebra_from_json(arg);
  if (std::filesystem::is_regular_file(arg)) return algebra_from_json(read_file(arg));
  if (arg.find(':') != std::string::npos) return build(parse_family_spec(arg));
  throw Exit{kUsage, "cannot read " + arg + " (neither JSON, a file nor a family spec)"};
}

// Inline JSON or a path to a JSON file.
std::string json_argument(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && arg[first] == '{') return arg;
  return read_file(arg);
}

ordered_json defects_json(const std::vector<JacobiViolation>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& d : v)
    a.push_back({{"i", d.i + 1}, {"j", d.j + 1}, {"k", d.k + 1}, {"s", d.s + 1}, {"value", to_string(d.value)}});
  return a;
}

template <class T>
ordered_json list(const std::vector<T>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(x);
  return a;
}

std::vector<std::size_t> dims(const std::vector<Subspace>& s) {
  std::vector<std::size_t> d;
  for (const auto& x : s) d.push_back(x.dim());
  return d;
}

ordered_json profile(const std::map<long, std::size_t>& p) {
  ordered_json o = ordered_json::object();
  for (const auto& [w, d] : p) o[std::to_string(w)] = d;
  return o;
}

// ---------------------------------------------------------------- rendering

void flatten(const ordered_json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
  } else if (j.is_array() && std::all_of(j.begin(), j.end(), [](const ordered_json& e) { return e.is_primitive(); })) {
    std::string s;
    for (const auto& e : j) s += (s.empty() ? "" : " ") + (e.is_string() ? e.get<std::string>() : e.dump());
    rows.emplace_back(prefix, s.empty() ? "-" : s);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

std::string render_table(const ordered_json& j) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::size_t w = 0;
  for (const auto& r : rows) w = std::max(w, r.first.size());
  std::string s;
  for (const auto& [k, v] : rows) s += k + std::string(w - k.size() + 2, ' ') + v + "\n";
  return s;
}

void emit(const ordered_json& j, const Output& o, std::ostream& out) {
  const std::string text = o.table ? render_table(j) : j.dump(2) + "\n";
  if (o.out_path.empty())
    out << text;
  else
    write_file(o.out_path, text);
}

// ---------------------------------------------------------------- analyze

ordered_json invariants_section(const LieAlgebra& g, std::uint64_t seed) {
  ordered_json s;
  const auto cs = central_series(g);
  const bool nil = cs.nilindex.has_value();
  s["nilpotent"] = nil;
  s["solvable"] = is_solvable(g);
  s["nilindex"] = nil ? ordered_json(*cs.nilindex) : ordered_json(nullptr);
  s["descending_central_series"] = list(dims(cs.descending));
  s["ascending_central_series"] = list(dims(cs.ascending));
  s["derived_series"] = list(dims(derived_series(g)));
  s["center_dim"] = center(g).dim();
  if (nil) {
    s["abelianity_index"] = abelianity_index(g);
    s["type_Qn"] = is_type_Qn(g);
    s["characteristic_sequence"] = g.dim() > 0 ? list(characteristic_sequence(g, seed)) : ordered_json::array();
    const auto gr = natural_grading(g);
    s["natural_grading"] = gr ? list(gr->weight) : ordered_json(nullptr);
  } else {
    s["abelianity_index"] = nullptr;
    s["type_Qn"] = nullptr;
    s["characteristic_sequence"] = nullptr;
    s["natural_grading"] = nullptr;
  }
  return s;
}

ordered_json derivations_section(const LieAlgebra& g) {
  ordered_json s;
  const auto der = derivation_space(g);
  const std::size_t inner = inner_derivations(g).dim();
  const auto cn = characteristic_nilpotency(g);
  s["dim_der"] = der.space.dim();
  s["dim_inner"] = inner;
  s["h1"] = der.space.dim() - inner;
  s["characteristically_nilpotent"] = cn.characteristically_nilpotent;
  s["der_lower_central_series"] = list(cn.series_dims);
  s["diagonal_torus_dim"] = diagonal_torus(g).diagonal_torus_dim;
  s["complete"] = center(g).is_zero() && der.space.dim() == inner;
  return s;
}

ordered_json cohomology_section(const LieAlgebra& g) {
  ordered_json s;
  ordered_json adj;
  if (g.dim() > kAdjointH2Bound) {
    adj["refused"] = "dimension " + std::to_string(g.dim()) + " exceeds bound " + std::to_string(kAdjointH2Bound);
  } else {
    Z2Options opt;
    opt.with_basis = false;
    const auto rep = adjoint_z2(g, opt);
    adj["z2"] = rep.z2_dim;
    adj["b2"] = rep.b2_dim;
    adj["h2"] = rep.h2_dim;
    adj["z2_by_weight"] = profile(rep.weight_profile);
    adj["h2_by_weight"] = profile(rep.h2_weight_profile);
  }
  s["adjoint"] = adj;
  const auto sh = scalar_h2(g);
  ordered_json sc;
  sc["h2"] = sh.dim;
  ordered_json labels = ordered_json::array();
  for (const auto& [i, j] : sh.labels) labels.push_back({i + 1, j + 1});
  sc["labels"] = labels;
  s["scalar"] = sc;
  return s;
}

int cmd_build(const std::string& spec, const Output& o, std::ostream& out) {
  const LieAlgebra g = build(parse_family_spec(spec));
  const auto bad = jacobi_defect(g);
  if (!bad.empty()) throw Exit{kInvalidAlgebra, spec + " violates Jacobi at " + std::to_string(bad.size()) + " coordinates"};
  const std::string text = algebra_to_json(g) + "\n";
  if (o.out_path.empty())
    out << text;
  else
    write_file(o.out_path, text);
  return kOk;
}

struct Sections {
  bool invariants = false, derivations = false, cohomology = false;
};

int cmd_analyze(const std::string& input, Sections sec, std::uint64_t seed, const Output& o, std::ostream& out) {
  const LieAlgebra g = load_algebra(input);
  ordered_json r;
  r["subject"] = input;
  r["dim"] = g.dim();
  const auto bad = jacobi_defect(g);
  r["lie_algebra"] = bad.empty();
  if (!bad.empty()) {
    r["jacobi_defects"] = defects_json(bad);
    emit(r, o, out);
    return kInvalidAlgebra;
  }
  if (!sec.invariants && !sec.derivations && !sec.cohomology) sec = {true, true, true};
  if (sec.invariants) r["invariants"] = invariants_section(g, seed);
  if (sec.derivations) r["derivations"] = derivations_section(g);
  if (sec.cohomology) r["cohomology"] = cohomology_section(g);
  emit(r, o, out);
  return kOk;
}

// m of a (2m+1)-dimensional algebra, for psi terms.
std::size_t psi_parameter(const LieAlgebra& g) {
  if (g.dim() % 2 == 0 || g.dim() < 9) throw Exit{kUsage, "psi terms need an algebra of dimension 2m+1 with m ≥ 4"};
  return (g.dim() - 1) / 2;
}

int cmd_deform(const std::string& input, const std::vector<std::string>& terms, const Output& o, std::ostream& out) {
  const LieAlgebra g = load_algebra(input);
  if (!is_lie_algebra(g)) throw Exit{kInvalidAlgebra, input + " is not a Lie algebra"};
  Cochain2 psi(g.dim());
  for (const auto& t : terms) {
    if (t.rfind("psi:", 0) == 0) {
      const auto term = parse_cocycle_term(t);
      psi = psi + psi_family(psi_parameter(g), term.k, term.r) * term.c;
    } else {
      psi = psi + cochain_from_json(json_argument(t), g.dim());
    }
  }
  const auto bad = jacobi_defect(add_cochain(g, psi));
  if (!bad.empty()) {
    ordered_json r;
    r["subject"] = input;
    r["expandable"] = false;
    r["cocycle"] = is_cocycle(g, psi);
    r["jacobi_defects"] = defects_json(bad);
    Output report = o;
    report.out_path.clear();
    emit(r, report, out);
    return kInvalidAlgebra;
  }
  const std::string text = algebra_to_json(deform(g, psi)) + "\n";
  if (o.out_path.empty())
    out << text;
  else
    write_file(o.out_path, text);
  return kOk;
}

int cmd_extend(const std::string& input, const std::string& cochain, const Output& o, std::ostream& out) {
  const LieAlgebra g = load_algebra(input);
  if (!is_lie_algebra(g)) throw Exit{kInvalidAlgebra, input + " is not a Lie algebra"};
  const ScalarCochain2 phi = scalar_cochain_from_json(json_argument(cochain), g.dim());
  if (!is_scalar_cocycle(g, phi)) throw Exit{kInvalidAlgebra, "the scalar cochain is not a 2-cocycle; the extension would violate Jacobi"};
  const std::string text = algebra_to_json(central_extension(g, phi)) + "\n";
  if (o.out_path.empty())
    out << text;
  else
    write_file(o.out_path, text);
  return kOk;
}

// ---------------------------------------------------------------- verify-paper

std::pair<std::size_t, std::size_t> parse_range(const std::string& s, bool extended) {
  static const std::regex re(R"((\d+)\.\.(\d+))");
  std::smatch mt;
  if (!std::regex_match(s, mt, re)) throw Exit{kUsage, "--m-range must look like A..B"};
  const std::size_t lo = std::stoul(mt[1]), hi = std::stoul(mt[2]);
  if (lo < 4) throw Exit{kUsage, "m ≥ 4 required"};
  if (lo > hi) throw Exit{kUsage, "--m-range needs A ≤ B"};
  if (hi > 8) throw Exit{kUsage, "m ≤ 8 required"};
  if (hi > 6 && !extended) throw Exit{kUsage, "m > 6 needs --extended"};
  return {lo, hi};
}

std::string status(const Row& r) { return r.informational ? "INFO" : r.pass ? "PASS" : "FAIL"; }

std::string verify_table(const std::vector<Row>& rows) {
  std::vector<std::vector<std::string>> cells{{"claim", "m", "subject", "expected", "computed", "status"}};
  for (const auto& r : rows)
    cells.push_back({r.claim, r.m ? std::to_string(*r.m) : "-", r.subject, r.expected, r.computed, status(r)});
  std::vector<std::size_t> w(6, 0);
  for (const auto& c : cells)
    for (std::size_t i = 0; i < 6; ++i) w[i] = std::max(w[i], c[i].size());
  std::string s;
  for (const auto& c : cells) {
    for (std::size_t i = 0; i < 6; ++i) s += c[i] + (i + 1 < 6 ? std::string(w[i] - c[i].size() + 2, ' ') : "\n");
  }
  return s;
}

ordered_json verify_json(const std::vector<Row>& rows, std::size_t lo, std::size_t hi) {
  ordered_json j;
  j["m_range"] = {lo, hi};
  ordered_json a = ordered_json::array();
  std::size_t failed = 0, informational = 0;
  for (const auto& r : rows) {
    failed += !r.pass && !r.informational;
    informational += r.informational;
    a.push_back({{"claim", r.claim},
                 {"m", r.m ? ordered_json(*r.m) : ordered_json(nullptr)},
                 {"subject", r.subject},
                 {"expected", r.expected},
                 {"computed", r.computed},
                 {"status", status(r)}});
  }
  j["rows"] = a;
  j["summary"] = {{"rows", rows.size()}, {"failed", failed}, {"informational", informational}};
  j["pass"] = failed == 0;
  return j;
}

int cmd_verify(const std::string& range, bool extended, const std::string& fixture, std::uint64_t seed, unsigned jobs,
               bool json, const Output& o, std::ostream& out) {
  const auto [lo, hi] = parse_range(range, extended);
  Context ctx;
  ctx.seed = seed;
  if (!fixture.empty()) {
    const LieAlgebra f = load_algebra(fixture);
    ctx.g4_override[psi_parameter(f)] = f;
  }
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  const auto rows = evaluate(cells_for_range(lo, hi), ctx, jobs);
  const ordered_json j = verify_json(rows, lo, hi);
  if (!o.out_path.empty()) write_file(o.out_path, j.dump(2) + "\n");
  if (json)
    out << j.dump(2) << "\n";
  else {
    out << verify_table(rows);
    const auto& sm = j["summary"];
    out << sm["rows"].get<std::size_t>() << " rows, " << sm["failed"].get<std::size_t>() << " failed, "
        << sm["informational"].get<std::size_t>() << " informational\n";
  }
  return all_pass(rows) ? kOk : kVerificationFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on nilpotent Lie algebras given by structure constants", "cnlie"};
  app.require_subcommand(1);

  Output o;
  bool json = false, table = false;
  std::uint64_t seed = kDefaultSeed;
  auto fmt = [&](CLI::App* sub) {
    auto* j = sub->add_flag("--json", json, "JSON output (default)");
    sub->add_flag("--table", table, "plain-text table output")->excludes(j);
  };

  std::string spec;
  auto* b = app.add_subcommand("build", "write the algebra of a family spec, e.g. g4:m=5");
  b->add_option("spec", spec, "family spec")->required();
  b->add_option("--out", o.out_path, "output file (default stdout)");

  std::string input;
  Sections sec;
  auto* a = app.add_subcommand("analyze", "report invariants, derivations and cohomology");
  a->add_option("input", input, "algebra JSON file or family spec")->required();
  a->add_flag("--invariants", sec.invariants);
  a->add_flag("--derivations", sec.derivations);
  a->add_flag("--cohomology", sec.cohomology);
  a->add_option("--seed", seed, "seed of the characteristic-sequence sampler");
  a->add_option("--out", o.out_path);
  fmt(a);

  std::vector<std::string> terms;
  auto* d = app.add_subcommand("deform", "add a 2-cochain to the law; refuses non-laws");
  d->add_option("input", input, "algebra JSON file or family spec")->required();
  d->add_option("terms", terms, "psi:k=2,r=3,c=1 terms, or cochain JSON (inline or file)")->required();
  d->add_option("--out", o.out_path);

  std::string cochain;
  auto* e = app.add_subcommand("extend", "central extension by a scalar 2-cocycle");
  e->add_option("input", input, "algebra JSON file or family spec")->required();
  e->add_option("cochain", cochain, "scalar cochain JSON (inline or file)")->required();
  e->add_option("--out", o.out_path);

  std::string range = "4..6", fixture;
  bool extended = false;
  unsigned jobs = 0;
  auto* v = app.add_subcommand("verify-paper", "evaluate the claim manifest over a range of m");
  v->add_option("--m-range", range, "inclusive range A..B (default 4..6)");
  v->add_flag("--extended", extended, "allow m up to 8");
  v->add_option("--fixture", fixture, "substitute this algebra for g4 at its m (negative control)");
  v->add_option("--seed", seed, "seed of the characteristic-sequence sampler");
  v->add_option("--jobs", jobs, "worker threads (default: hardware concurrency)");
  v->add_option("--out", o.out_path, "also write the JSON report here");
  fmt(v);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kUsage;
  }
  o.table = table;

  try {
    if (*b) return cmd_build(spec, o, out);
    if (*a) return cmd_analyze(input, sec, seed, o, out);
    if (*d) return cmd_deform(input, terms, o, out);
    if (*e) return cmd_extend(input, cochain, o, out);
    if (*v) return cmd_verify(range, extended, fixture, seed, jobs, !table && json, o, out);
  } catch (const Exit& x) {
    err << "error: " << x.message << "\n";
    return x.code;
  } catch (const ParseError& x) {
    err << "error: " << x.what() << "\n";
    return kUsage;
  } catch (const ParameterError& x) {
    err << "error: " << x.what() << "\n";
    return kUsage;
  } catch (const DimensionError& x) {
    err << "error: " << x.what() << "\n";
    return kUsage;
  } catch (const NotExpandable& x) {
    err << "error: " << x.what() << "\n";
    return kInvalidAlgebra;
  } catch (const std::exception& x) {
    err << "error: " << x.what() << "\n";
    return kInvalidAlgebra;
  }
  return kUsage;
}

}  // namespace cnlie::tools
