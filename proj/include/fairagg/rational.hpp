#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "fairagg/errors.hpp"

namespace fairagg {

// Exact arithmetic everywhere a fraction appears: fairness bounds, coreset
// weights, ratio assertions. Arbitrary precision so weight merges never overflow.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// floor(r * k) via integer division; r must be nonnegative.
inline std::int64_t floor_scaled(const Rational& r, std::int64_t k) {
    const BigInt num = numerator(r) * k;
    const BigInt den = denominator(r);
    return static_cast<std::int64_t>(num / den);
}

// ceil(r * k); r nonnegative.
inline std::int64_t ceil_scaled(const Rational& r, std::int64_t k) {
    const BigInt num = numerator(r) * k;
    const BigInt den = denominator(r);
    BigInt q = num / den;
    if (q * den < num) ++q;
    return static_cast<std::int64_t>(q);
}

// Accepts "p/q", plain integers, and decimal literals ("0.25" -> 1/4).
Rational parse_rational(const std::string& text);

// Canonical form: reduced "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rational& r);

} // namespace fairagg
