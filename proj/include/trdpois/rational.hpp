// Copyright (c) 2026 trdpois contributors
// SPDX-License-Identifier: Apache-2.0
//
#ifndef TRDPOIS_RATIONAL_HPP
#define TRDPOIS_RATIONAL_HPP

#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace trdpois {

/// Arbitrary-precision integers and rationals used by the oracle module.
/// cpp_rational keeps the canonical form this library relies on: numerator
/// and denominator coprime, denominator positive.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Parses "p/q", an integer, or a decimal with optional exponent ("0.25",
/// "-1/3", "1e-9") into an exact rational.  Throws trdpois::Error on
/// malformed input or a zero denominator.
BigRational rational_from_string(std::string_view text);

/// Exact rational value of a finite double (every finite double is a
/// dyadic rational).
BigRational rational_from_double(double x);

/// Correctly rounded (nearest, ties to even) double value of a rational.
double to_double(const BigRational& q);

}  // namespace trdpois

#endif  // TRDPOIS_RATIONAL_HPP
