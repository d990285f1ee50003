#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace modinv {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// "p/q" with q > 0, always including the denominator ("3/1").
std::string to_pq_string(const BigRat& x);

/// Accepts "p/q" or "p" with optional leading '-'. Throws std::invalid_argument.
BigRat parse_bigrat(std::string_view text);

inline bool is_integer(const BigRat& x) { return x.get_den() == 1; }

/// base^exp for a small exponent.
BigInt pow_int(long base, unsigned long exp);

}  // namespace modinv
