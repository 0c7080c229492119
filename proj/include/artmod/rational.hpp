#pragma once

#include <gmpxx.h>

#include <string>

namespace artmod {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator, 0 = 0/1), which is exactly the invariant the rest
// of the engine relies on.
using Rat = mpq_class;
using Int = mpz_class;

/// Parse "p/q" or "p". Throws std::invalid_argument on malformed input
/// or zero denominator.
Rat rat_from_string(const std::string& s);

/// Format as "p/q", or "p" when the denominator is 1.
std::string rat_to_string(const Rat& x);

/// Generalized binomial C^j_i = j(j-1)...(j-i+1)/i! with C^j_0 = 1 and
/// C^j_i = 0 for i < 0. Defined for any integer j >= 0.
Rat binomial_coeff(long j, long i);

}  // namespace artmod
