#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace bookshift {

/// Exact rational number. mpq_class keeps values canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p/q", "p" or "-p/q". Throws Error(parse) on malformed text or a zero
/// denominator. The result is canonicalized.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

std::string join(const std::vector<Rational>& values, std::string_view sep = " ");

Rational sum(const std::vector<Rational>& values);

/// Lowest common multiple of all denominators (1 for an empty list).
BigInt common_denominator(const std::vector<Rational>& values);

} // namespace bookshift
