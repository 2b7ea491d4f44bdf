#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace superpres {

/// Exact rational scalar. Always kept in lowest terms with a positive
/// denominator; zero is 0/1.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Builds num/den in canonical form. Throws std::domain_error on den == 0.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// "p/q", or bare "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

} // namespace superpres
