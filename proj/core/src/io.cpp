#include "cnlie/io.hpp"

#include <json.hpp>

#include "cnlie/error.hpp"

namespace cnlie {

using nlohmann::ordered_json;

namespace {

ordered_json term(std::size_t i, std::size_t j, const Rational& c) {
  ordered_json t;
  t["i"] = i + 1;
  t["j"] = j + 1;
  t["c"] = to_string(c);
  return t;
}

ordered_json term(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
  ordered_json t;
  t["i"] = i + 1;
  t["j"] = j + 1;
  t["k"] = k + 1;
  t["c"] = to_string(c);
  return t;
}

ordered_json parse(std::string_view text) {
  try {
    return ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::size_t index_field(const ordered_json& t, const char* key, std::size_t dim) {
  if (!t.contains(key) || !t[key].is_number_integer()) throw ParseError(std::string("term field '") + key + "' must be an integer");
  const auto v = t[key].get<long long>();
  if (v < 1 || static_cast<std::size_t>(v) > dim)
    throw ParseError(std::string("term field '") + key + "' out of range 1.." + std::to_string(dim));
  return static_cast<std::size_t>(v - 1);
}

Rational coeff_field(const ordered_json& t) {
  if (!t.contains("c")) throw ParseError("term field 'c' missing");
  if (t["c"].is_string()) return parse_rational(t["c"].get<std::string>());
  if (t["c"].is_number_integer()) return Rational(t["c"].get<long>());
  throw ParseError("term field 'c' must be a rational string \"p/q\"");
}

const ordered_json& terms_array(const ordered_json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key) || !doc[key].is_array())
    throw ParseError(std::string("expected an object with array '") + key + "'");
  return doc[key];
}

}  // namespace

std::string algebra_to_json(const LieAlgebra& g, int indent) {
  ordered_json doc;
  doc["dim"] = g.dim();
  doc["basis"] = g.labels();
  doc["brackets"] = ordered_json::array();
  for (const auto& t : g.terms()) doc["brackets"].push_back(term(t.i, t.j, t.k, t.c));
  return doc.dump(indent);
}

LieAlgebra algebra_from_json(std::string_view text) {
  const ordered_json doc = parse(text);
  if (!doc.is_object() || !doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 0)
    throw ParseError("algebra JSON needs a non-negative integer 'dim'");
  const auto n = doc["dim"].get<std::size_t>();
  std::vector<std::string> labels;
  if (doc.contains("basis")) {
    if (!doc["basis"].is_array()) throw ParseError("'basis' must be an array of labels");
    for (const auto& l : doc["basis"]) {
      if (!l.is_string()) throw ParseError("'basis' must be an array of labels");
      labels.push_back(l.get<std::string>());
    }
    if (labels.size() != n) throw ParseError("'basis' length differs from 'dim'");
  }
  std::vector<BracketTerm> terms;
  if (doc.contains("brackets"))
    for (const auto& t : terms_array(doc, "brackets")) {
      const std::size_t i = index_field(t, "i", n), j = index_field(t, "j", n), k = index_field(t, "k", n);
      if (i >= j) throw ParseError("bracket terms require i < j");
      terms.push_back({i, j, k, coeff_field(t)});
    }
  return LieAlgebra(n, terms, labels);
}

std::string cochain_to_json(const Cochain2& psi, int indent) {
  ordered_json doc;
  doc["terms"] = ordered_json::array();
  for (const auto& t : psi.terms()) doc["terms"].push_back(term(t.i, t.j, t.k, t.c));
  return doc.dump(indent);
}

Cochain2 cochain_from_json(std::string_view text, std::size_t dim) {
  const ordered_json doc = parse(text);
  Cochain2 psi(dim);
  for (const auto& t : terms_array(doc, "terms")) {
    const std::size_t i = index_field(t, "i", dim), j = index_field(t, "j", dim), k = index_field(t, "k", dim);
    if (i >= j) throw ParseError("cochain terms require i < j");
    psi.add(i, j, k, coeff_field(t));
  }
  return psi;
}

std::string scalar_cochain_to_json(const ScalarCochain2& phi, int indent) {
  ordered_json doc;
  doc["terms"] = ordered_json::array();
  for (const auto& [ij, c] : phi.terms()) doc["terms"].push_back(term(ij.first, ij.second, c));
  return doc.dump(indent);
}

ScalarCochain2 scalar_cochain_from_json(std::string_view text, std::size_t dim) {
  const ordered_json doc = parse(text);
  ScalarCochain2 phi(dim);
  for (const auto& t : terms_array(doc, "terms")) {
    const std::size_t i = index_field(t, "i", dim), j = index_field(t, "j", dim);
    if (i >= j) throw ParseError("cochain terms require i < j");
    phi.set(i, j, phi(i, j) + coeff_field(t));
  }
  return phi;
}

}  // namespace cnlie
