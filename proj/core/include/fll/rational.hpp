#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace fll {

/// Exact rational scalar used for all algebraic (non-numeric) computation.
/// Arbitrary precision, so nothing in the rewriting or symmetrization
/// pipeline can overflow.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p", "-p" or "p/q" (q > 0 after normalization). Throws
/// std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

/// Canonical form "p" or "p/q" with gcd(p,q)=1, q>0.
std::string rational_str(const Rational& r);

double to_double(const Rational& r);

Rational rational_factorial(unsigned n);

}  // namespace fll
