#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace forestmatrix {

// Every count and ratio in this library is exact: arbitrary-precision
// integers for forest counts, canonical rationals (lowest terms, positive
// denominator) for matrix entries, and a 50-digit decimal float reserved
// for comparisons against irrational limits.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using HighFloat = boost::multiprecision::cpp_dec_float_50;

inline HighFloat to_highfloat(const Rational& r) {
    return HighFloat(numerator(r)) / HighFloat(denominator(r));
}

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Canonical "num/den" form, e.g. "13/21", "1/1".
inline std::string to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace forestmatrix
