#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cnlie {

// mpq_class keeps values canonical (lowest terms, positive denominator)
// after every arithmetic operation; parse_rational canonicalizes input.
using Rational = mpq_class;
using Integer = mpz_class;

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

// Accepts "p", "p/q", optional sign, surrounding whitespace. Throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace cnlie
