#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace polyinv {

/// Arbitrary-precision integer used by the interpreter and all inference math.
using Int = mpz_class;
/// Exact rational used by linear algebra.
using Rational = mpq_class;

std::string to_string(const Int& v);
std::string to_string(const Rational& v);

/// Parses a decimal integer with optional sign. Throws std::invalid_argument.
Int parse_int(std::string_view text);

/// Reduces v to the signed 64-bit two's complement range in place.
void wrap_to_int64(Int& v);

bool fits_int64(const Int& v);
std::int64_t to_int64(const Int& v);

/// Truncating division and remainder (C semantics). Divisor must be nonzero.
Int div_trunc(const Int& a, const Int& b);
Int mod_trunc(const Int& a, const Int& b);

/// Ceiling of a/2 for any sign of a (rounds toward +infinity).
Int ceil_half(const Int& a);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

}  // namespace polyinv
