#include <forestmatrix/closed_forms.hpp>

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

#include <forestmatrix/errors.hpp>
#include <forestmatrix/fib_lucas.hpp>

namespace forestmatrix {
namespace {

void require_min_order(const char* family, int n, int min) {
    if (n < min) {
        throw ValidationError(std::string(family) + " closed forms require n >= " +
                              std::to_string(min) + ", got " + std::to_string(n));
    }
}

std::vector<BigInt> fib_odd_table(int up_to) {
    // t[0] stays 0: fib_odd is defined from index 1 and index 0 is never read.
    std::vector<BigInt> t(static_cast<std::size_t>(up_to) + 1);
    for (int k = 1; k <= up_to; ++k) t[k] = fib_odd(k);
    return t;
}

std::vector<BigInt> fib_even_table(int up_to) {
    std::vector<BigInt> t(static_cast<std::size_t>(up_to) + 1);
    for (int k = 0; k <= up_to; ++k) t[k] = fib_even(k);
    return t;
}

}  // namespace

ForestCountMatrix path_counts(int n) {
    require_min_order("path", n, 2);
    const auto odd = fib_odd_table(n);
    ForestCountMatrix out;
    out.n = n;
    out.f = fib_even(n);
    out.counts = IntegerMatrix(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            out.counts(i - 1, j - 1) =
                odd[std::min(i, j)] * odd[n + 1 - std::max(i, j)];
        }
    }
    return out;
}

ForestCountMatrix cycle_counts(int n) {
    require_min_order("cycle", n, 3);
    const auto even = fib_even_table(n);
    ForestCountMatrix out;
    out.n = n;
    out.f = fib_odd(n) + fib_odd(n + 1) - 2;
    out.counts = IntegerMatrix(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const int d = std::abs(j - i);
            out.counts(i - 1, j - 1) = even[d] + even[n - d];
        }
    }
    return out;
}

ForestCountMatrix cycle_counts_lucas(int n) {
    require_min_order("cycle", n, 3);
    const bool odd_order = n % 2 != 0;
    // f_ij = fib(t)*lucas(n) or lucas(t)*fib(n); t = |n - 2|j-i|| <= n.
    std::vector<BigInt> numerator(static_cast<std::size_t>(n) + 1);
    for (int t = 0; t <= n; ++t) {
        numerator[t] = odd_order ? fib(t) : lucas(t);
    }
    const BigInt common = odd_order ? lucas(n) : fib(n);

    ForestCountMatrix out;
    out.n = n;
    out.f = common * common;
    if (!odd_order) out.f *= 5;
    out.counts = IntegerMatrix(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const int t = std::abs(n - 2 * std::abs(j - i));
            out.counts(i - 1, j - 1) = numerator[t] * common;
        }
    }
    return out;
}

TCaterpillarCounts tcaterpillar_counts(int n) {
    require_min_order("T-caterpillar", n, 3);
    TCaterpillarCounts out;
    out.f = 4 * fib_odd(n - 1);
    out.f33 = 4 * fib_odd(n - 2);
    out.fnn = 4 * fib_even(n - 2);
    return out;
}

std::vector<BigInt> cycle_row_numerators(int n) {
    require_min_order("cycle", n, 3);
    const bool odd_order = n % 2 != 0;
    std::vector<BigInt> row;
    row.reserve(static_cast<std::size_t>(n));
    for (int d = 0; d < n; ++d) {
        const int t = std::abs(n - 2 * d);
        row.push_back(odd_order ? fib(t) : lucas(t));
    }
    return row;
}

std::vector<VertexClassification> classify_vertices(const ProximityMatrix& pm) {
    const Rational half(1, 2);
    std::vector<VertexClassification> out;
    out.reserve(static_cast<std::size_t>(pm.n));
    for (int v = 1; v <= pm.n; ++v) {
        VertexClassification c;
        c.vertex = v;
        c.ratio = pm.entries(v - 1, v - 1);
        c.kind = c.ratio > half   ? VertexKind::introvert
                 : c.ratio < half ? VertexKind::extrovert
                                  : VertexKind::boundary;
        out.push_back(std::move(c));
    }
    return out;
}

HighFloat golden_ratio_gap(GoldenFamily family, int n) {
    Rational ratio;
    HighFloat limit;
    switch (family) {
        case GoldenFamily::path_first_vertex:
            require_min_order("path", n, 2);
            ratio = Rational(fib_odd(n), fib_even(n));
            limit = golden_ratio_inverse();
            break;
        case GoldenFamily::tcat_last_vertex:
            require_min_order("T-caterpillar", n, 3);
            ratio = Rational(fib_even(n - 2), fib_odd(n - 1));
            limit = golden_ratio_inverse();
            break;
        case GoldenFamily::tcat_vertex_3:
            require_min_order("T-caterpillar", n, 3);
            ratio = Rational(fib_odd(n - 2), fib_odd(n - 1));
            limit = one_minus_golden_inverse();
            break;
        default:
            throw ValidationError("unknown golden-ratio family");
    }
    const HighFloat gap = to_highfloat(ratio) - limit;
    return gap < 0 ? HighFloat(-gap) : gap;
}

}  // namespace forestmatrix
