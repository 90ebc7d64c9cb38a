#pragma once

#include <gmpxx.h>

#include <string>

namespace gccp {

// All counting and probability in this library is exact. GMP supplies the
// arbitrary-precision machinery; these aliases are the vocabulary the rest of
// the code speaks.
using BigInt = mpz_class;
using BigRational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
/// Throws ValidationError when den == 0.
BigRational make_rational(BigInt num, BigInt den);

/// Parses "a/b", "a", or a plain integer string into a rational in lowest terms.
BigRational parse_rational(const std::string& text);

/// C(n, k). Requires n >= 0; returns 0 when k < 0 or k > n.
/// Small n is served from a shared Pascal triangle, large n computed directly.
BigInt binomial(long n, long k);

/// Stirling number of the second kind S(n, k) via the standard recurrence.
/// S(0,0) = 1, S(n,0) = 0 for n > 0, S(n,k) = 0 for k > n.
BigInt stirling2(long n, long k);

/// Falling factorial n (n-1) ... (n-k+1); equals k! C(n,k).
BigInt falling_factorial(long n, long k);

/// Exact harmonic number H(n) = 1 + 1/2 + ... + 1/n. Requires n >= 1.
BigRational harmonic(long n);

/// Renders the value rounded (half to even) to the given count of significant
/// digits, e.g. to_decimal(68.98456..., 6) == "68.9846".
std::string to_decimal(const BigRational& value, int significant_digits = 6);

/// Renders the value rounded (half to even) to a fixed number of places after
/// the decimal point, e.g. to_fixed(449/140, 6) == "3.207143".
std::string to_fixed(const BigRational& value, int decimal_places);

}  // namespace gccp
