#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bohrgap {

// All exact arithmetic runs on GMP. mpq_class canonicalizes on construction,
// so the invariants (positive denominator, coprime parts) hold throughout.
using BigInt = mpz_class;
using BigRational = mpq_class;

// Parses "p/q" or a plain integer. Throws failure(invalid_argument).
BigRational parse_rational(std::string_view text);

// Canonical "p/q" (or "p" when the denominator is 1).
std::string rational_text(const BigRational& x);

// x - floor(x), in [0, 1).
BigRational fractional_part(const BigRational& x);

// Distance from x to the nearest integer; result in [0, 1/2].
BigRational dist_to_nearest_int(const BigRational& x);

BigInt floor_div(const BigInt& a, const BigInt& b);

} // namespace bohrgap
