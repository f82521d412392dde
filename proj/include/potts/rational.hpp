#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace potts {

// Every weight, probability and correlation sum in the engine is a Rational.
// mpq_class keeps values in lowest terms with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p", "p/q" and finite decimals such as "2.75" (converted
// exactly). Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

// num/den in lowest terms; the two-argument mpq_class constructor does not
// reduce, and unreduced values compare unequal to their reduced forms.
Rational ratio(long num, long den);

Rational power(const Rational& base, unsigned exponent);

// 2^-exponent * value, exactly.
Rational halve(const Rational& value, unsigned exponent);

}  // namespace potts
