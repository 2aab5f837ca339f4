#include "forestmatrix/fib_lucas.hpp"

#include "forestmatrix/errors.hpp"

#include <string>

namespace forestmatrix {

BigInt fib(long i) {
    if (i < -1) throw ValidationError("fib index must be >= -1, got " + std::to_string(i));
    if (i == -1) return BigInt(1);
    // Plain linear pass; exact at any index.
    BigInt a = 0, b = 1;
    for (long k = 0; k < i; ++k) {
        a += b;
        std::swap(a, b);  // (a, b) = (F(k+1), F(k+2))
    }
    return a;
}

BigInt fib_odd(long i) {
    if (i < 1) throw ValidationError("fib_odd index must be >= 1, got " + std::to_string(i));
    return fib(2 * i - 1);
}

BigInt fib_even(long i) {
    if (i < 0) throw ValidationError("fib_even index must be >= 0, got " + std::to_string(i));
    return fib(2 * i);
}

BigInt lucas(long i) {
    if (i < 0) throw ValidationError("lucas index must be >= 0, got " + std::to_string(i));
    return fib(i - 1) + fib(i + 1);
}

const HighFloat& golden_ratio() {
    static const HighFloat phi = (sqrt(HighFloat(5)) + 1) / 2;
    return phi;
}

const HighFloat& golden_ratio_inverse() {
    static const HighFloat inv = (sqrt(HighFloat(5)) - 1) / 2;
    return inv;
}

const HighFloat& one_minus_golden_inverse() {
    static const HighFloat v = 1 - golden_ratio_inverse();
    return v;
}

}  // namespace forestmatrix
