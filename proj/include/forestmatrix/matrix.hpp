#pragma once

#include "forestmatrix/bigint.hpp"

#include <cstddef>
#include <vector>

namespace forestmatrix {

/// Dense square matrix of arbitrary-precision integers. Indices are
/// 0-based; row/column k corresponds to vertex label k+1.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    explicit IntegerMatrix(std::size_t n) : n_(n), a_(n * n) {}

    static IntegerMatrix identity(std::size_t n);

    std::size_t order() const { return n_; }

    BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    bool operator==(const IntegerMatrix&) const = default;

    bool is_symmetric() const;
    BigInt row_sum(std::size_t i) const;
    BigInt column_sum(std::size_t j) const;

    IntegerMatrix operator*(const IntegerMatrix& rhs) const;
    IntegerMatrix scaled(const BigInt& factor) const;

    /// Exact determinant by fraction-free (Bareiss) elimination with row
    /// pivoting. O(n^3) big-integer operations.
    BigInt determinant() const;

    /// Copy of the leading k-by-k block.
    IntegerMatrix leading_submatrix(std::size_t k) const;

private:
    std::size_t n_ = 0;
    std::vector<BigInt> a_;
};

/// Dense square matrix of exact rationals; entries stay in lowest terms.
class RationalMatrix {
public:
    RationalMatrix() = default;
    explicit RationalMatrix(std::size_t n) : n_(n), a_(n * n) {}

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_integer(const IntegerMatrix& m);

    std::size_t order() const { return n_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    bool operator==(const RationalMatrix&) const = default;

    bool is_symmetric() const;
    Rational row_sum(std::size_t i) const;
    Rational column_sum(std::size_t j) const;

    RationalMatrix operator*(const RationalMatrix& rhs) const;
    RationalMatrix scaled(const Rational& factor) const;

    /// Exact inverse by Gauss-Jordan elimination. Throws std::domain_error
    /// on a singular matrix.
    RationalMatrix inverse() const;

private:
    std::size_t n_ = 0;
    std::vector<Rational> a_;
};

}  // namespace forestmatrix
