#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace ringdef {

// GMP keeps mpq_class canonical (reduced, positive denominator) after every
// arithmetic operation; parse_rational canonicalizes explicitly.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Accepts "a", "-a", "a/b". Throws std::invalid_argument on bad text or b = 0.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

// p-adic valuation; nullopt encodes +infinity (q = 0).
std::optional<long> valuation(const Rational& q, unsigned long p);

Rational pow_int(const Rational& base, long e);

bool is_prime(unsigned long p);

}  // namespace ringdef
