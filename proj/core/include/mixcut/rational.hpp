#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace mixcut {

// Exact rational. mpq_class keeps values in lowest terms with a positive
// denominator after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "a", "-a", "a/b". Throws ValidationError on anything else or on a
// zero denominator.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

std::vector<Rational> parse_rationals(const std::vector<std::string>& texts);
std::vector<std::string> to_strings(const std::vector<Rational>& values);

Rational floor(const Rational& r);

// num / den in lowest terms. Throws ValidationError on a zero denominator.
Rational ratio(long num, long den);

// Decimal rendering with round-half-up at `digits` places.
std::string to_decimal(const Rational& r, int digits);

}  // namespace mixcut
