#pragma once

#include "forestmatrix/bigint.hpp"

namespace forestmatrix {

/// Fibonacci number F(i) for i >= -1, with the convention F(-1) = 1
/// (the value that makes L(i) = F(i-1) + F(i+1) hold from i = 0 on).
/// Indices below -1 are rejected.
BigInt fib(long i);

/// Odd-index subsequence F'(i) = F(2i-1), i >= 1.
/// Satisfies F'(i+1) = 3 F'(i) - F'(i-1) for i > 1 and F'(2) = 2 F'(1).
BigInt fib_odd(long i);

/// Even-index subsequence F''(i) = F(2i), i >= 0.
/// Satisfies F''(i+1) = 3 F''(i) - F''(i-1).
BigInt fib_even(long i);

/// Lucas number L(i) = F(i-1) + F(i+1), i >= 0: (2, 1, 3, 4, 7, 11, ...).
BigInt lucas(long i);

/// Golden ratio (sqrt(5)+1)/2 and friends, to 50 significant digits.
const HighFloat& golden_ratio();
const HighFloat& golden_ratio_inverse();      // 1/phi = phi - 1
const HighFloat& one_minus_golden_inverse();  // 1 - 1/phi = 1/phi^2

}  // namespace forestmatrix
