#include <forestmatrix/forest_exact.hpp>

#include <stdexcept>
#include <utility>

namespace forestmatrix {

ForestCountMatrix forest_matrix_exact(const Graph& g) {
    const int n = g.vertex_count();
    const IntegerMatrix m = identity_plus_laplacian(g);

    BigInt f = m.determinant();
    if (f < 1) {
        // det(I+L) counts the spanning rooted forests, so it is >= 1 for
        // every graph; anything else means the elimination itself is broken.
        throw std::logic_error("det(I+L) must be a positive integer");
    }

    const RationalMatrix inverse = RationalMatrix::from_integer(m).inverse();
    IntegerMatrix counts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Rational entry = inverse(i, j) * Rational(f);
            if (denominator(entry) != 1) {
                throw std::logic_error("adjugate entry f_ij is not an integer");
            }
            BigInt value = numerator(entry);
            if (value < 0) {
                throw std::logic_error("adjugate entry f_ij is negative");
            }
            counts(i, j) = std::move(value);
        }
    }
    return ForestCountMatrix{n, std::move(f), std::move(counts)};
}

ProximityMatrix proximity_matrix(const ForestCountMatrix& fc) {
    const std::size_t n = fc.counts.order();
    RationalMatrix entries(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            entries(i, j) = Rational(fc.counts(i, j), fc.f);
        }
    }
    return ProximityMatrix{fc.n, std::move(entries)};
}

BigInt count_spanning_trees(const Graph& g) {
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    // Any cofactor of the Laplacian works; use the leading (n-1)x(n-1) one.
    // For n == 1 this is the empty determinant, 1: a single vertex is its
    // own spanning tree.
    return laplacian(g).leading_submatrix(n - 1).determinant();
}

}  // namespace forestmatrix
