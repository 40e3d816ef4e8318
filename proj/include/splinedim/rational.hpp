#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace splinedim::exactla {

/// Arbitrary-precision integer.
using Int = boost::multiprecision::mpz_int;

/// Arbitrary-precision rational, always stored reduced with positive
/// denominator (GMP canonical form). The only scalar type in the library.
using Rational = boost::multiprecision::mpq_rational;

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// C(n, k), zero outside 0 <= k <= n.
Int binomial(long n, long k);

/// Parses "p", "-p" or "p/q" (q > 0 after normalization). Throws FormatError.
Rational parse_rational(std::string_view text);

/// "p" or "p/q", canonical form.
std::string rational_to_string(const Rational& value);

inline long long to_longlong(const Int& value) {
    return value.convert_to<long long>();
}

} // namespace splinedim::exactla
