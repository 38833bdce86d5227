#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace mzspace {

using Integer = mpz_class;

/// Arbitrary-precision rational, always stored gcd-reduced with a positive denominator.
using Rational = mpq_class;

/// Integer polynomial, ascending coefficients.
using IntPoly = std::vector<Integer>;

/// Rational polynomial, ascending coefficients.
using RatPoly = std::vector<Rational>;

std::string to_string(const Rational& q);
std::string to_string(const IntPoly& poly, char variable = 'x');

/// Drops trailing zero coefficients. The zero polynomial becomes empty.
void trim(IntPoly& poly);
void trim(RatPoly& poly);

IntPoly multiply(const IntPoly& a, const IntPoly& b);

/// Exact quotient of monic division. Throws std::domain_error when the remainder is nonzero.
IntPoly divide_exact(const IntPoly& numerator, const IntPoly& monic_divisor);

/// Quotient and remainder over Q; divisor must be nonzero.
std::pair<RatPoly, RatPoly> divide(const RatPoly& numerator, const RatPoly& divisor);

/// The e-th cyclotomic polynomial, by dividing x^e - 1 by Phi_d for every proper divisor d of e.
IntPoly cyclotomic_polynomial(unsigned e);

}  // namespace mzspace
