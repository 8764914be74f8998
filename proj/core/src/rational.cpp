#include "cnlie/rational.hpp"

#include <cctype>

#include "cnlie/error.hpp"

namespace cnlie {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw ParseError("malformed rational '" + std::string(text) + "'");
  Integer p(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  Integer q(std::string(den), 10);
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace cnlie
