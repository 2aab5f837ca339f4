#pragma once

#include <vector>

#include <forestmatrix/bigint.hpp>
#include <forestmatrix/forest_exact.hpp>

namespace forestmatrix {

// A vertex is an introvert when its tree is more likely rooted at itself
// than anywhere else (f_ii/f > 1/2), an extrovert when f_ii/f < 1/2, and on
// the boundary at exactly 1/2.  Comparisons are exact rational comparisons.
enum class VertexKind { introvert, extrovert, boundary };

struct VertexClassification {
    int vertex = 0;     // 1-based label
    Rational ratio;     // f_ii / f in lowest terms
    VertexKind kind = VertexKind::boundary;
};

// The three closed-form values known for the T-caterpillar T_n: the total
// forest count, the count for the first spine vertex (label 3), and the
// count for the last spine vertex (label n).
struct TCaterpillarCounts {
    BigInt f;
    BigInt f33;
    BigInt fnn;
};

// Families with a proven golden-ratio limit for a diagonal ratio of F.
enum class GoldenFamily {
    path_first_vertex,  // f_11/f on P_n  -> 1/phi
    tcat_last_vertex,   // f_nn/f on T_n  -> 1/phi
    tcat_vertex_3,      // f_33/f on T_n  -> 1 - 1/phi
};

// Closed form for the path P_n (n >= 2): f = fib_even(n) and
// f_ij = fib_odd(min(i,j)) * fib_odd(n+1-max(i,j)).
ForestCountMatrix path_counts(int n);

// Closed form for the cycle C_n (n >= 3): f = fib_odd(n) + fib_odd(n+1) - 2
// and f_ij = fib_even(d) + fib_even(n-d) with d = |j-i|.
ForestCountMatrix cycle_counts(int n);

// The same matrix as cycle_counts(n) computed through the Fibonacci/Lucas
// forms: with t = |n - 2|j-i||, odd n gives f = lucas(n)^2 and
// f_ij = fib(t)*lucas(n); even n gives f = 5*fib(n)^2 and
// f_ij = lucas(t)*fib(n).
ForestCountMatrix cycle_counts_lucas(int n);

// Closed forms for T_n (n >= 3): f = 4*fib_odd(n-1), f33 = 4*fib_odd(n-2),
// fnn = 4*fib_even(n-2).
TCaterpillarCounts tcaterpillar_counts(int n);

// Numerators of row 0 of the Lucas-form cycle matrix in order
// d = |j-i| = 0..n-1: fib(|n-2d|) for odd n, lucas(|n-2d|) for even n.
// Consecutive cycles read longer segments of one fixed two-sided sequence
// per parity: ...,13,5,2,1,1,2,5,13,... (odd) and ...,18,7,3,2,3,7,18,...
// (even).
std::vector<BigInt> cycle_row_numerators(int n);

// One classification per vertex, by exact comparison of f_ii/f with 1/2.
std::vector<VertexClassification> classify_vertices(const ProximityMatrix& pm);

// |ratio(n) - limit| evaluated in 50-digit reals, where ratio(n) is the
// exact closed-form rational for the family and limit is its golden-ratio
// value.  Requires n >= 2 for the path family and n >= 3 for the
// T-caterpillar families.
HighFloat golden_ratio_gap(GoldenFamily family, int n);

}  // namespace forestmatrix
