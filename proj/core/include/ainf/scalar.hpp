#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ainf {

/// Exact rational scalar. GMP keeps every value in canonical reduced form.
using Scalar = mpq_class;

/// Canonical "p/q" rendering (q >= 1, always present).
std::string format_scalar(const Scalar& x);

/// Accepts "p", "p/q", "-p/q". Throws MalformedInput on anything else or q = 0.
Scalar parse_scalar(std::string_view text);

inline int sign_of_parity(long long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace ainf
