#include "forestmatrix/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace forestmatrix {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool IntegerMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

BigInt IntegerMatrix::row_sum(std::size_t i) const {
    BigInt s = 0;
    for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j);
    return s;
}

BigInt IntegerMatrix::column_sum(std::size_t j) const {
    BigInt s = 0;
    for (std::size_t i = 0; i < n_; ++i) s += (*this)(i, j);
    return s;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
    IntegerMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const BigInt& aik = (*this)(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < n_; ++j) out(i, j) += aik * rhs(k, j);
        }
    return out;
}

IntegerMatrix IntegerMatrix::scaled(const BigInt& factor) const {
    IntegerMatrix out(n_);
    for (std::size_t i = 0; i < n_ * n_; ++i) out.a_[i] = a_[i] * factor;
    return out;
}

BigInt IntegerMatrix::determinant() const {
    const std::size_t n = n_;
    if (n == 0) return BigInt(1);
    std::vector<BigInt> m(a_);
    auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return m[i * n + j]; };

    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && at(r, k) == 0) ++r;
            if (r == n) return BigInt(0);
            for (std::size_t j = k; j < n; ++j) std::swap(at(k, j), at(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Exact by Sylvester's identity: prev divides the product.
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return sign == 1 ? at(n - 1, n - 1) : -at(n - 1, n - 1);
}

IntegerMatrix IntegerMatrix::leading_submatrix(std::size_t k) const {
    IntegerMatrix out(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) out(i, j) = (*this)(i, j);
    return out;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_integer(const IntegerMatrix& m) {
    RationalMatrix out(m.order());
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j < m.order(); ++j) out(i, j) = Rational(m(i, j));
    return out;
}

bool RationalMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

Rational RationalMatrix::row_sum(std::size_t i) const {
    Rational s = 0;
    for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j);
    return s;
}

Rational RationalMatrix::column_sum(std::size_t j) const {
    Rational s = 0;
    for (std::size_t i = 0; i < n_; ++i) s += (*this)(i, j);
    return s;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    RationalMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const Rational& aik = (*this)(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < n_; ++j) out(i, j) += aik * rhs(k, j);
        }
    return out;
}

RationalMatrix RationalMatrix::scaled(const Rational& factor) const {
    RationalMatrix out(n_);
    for (std::size_t i = 0; i < n_ * n_; ++i) out.a_[i] = a_[i] * factor;
    return out;
}

RationalMatrix RationalMatrix::inverse() const {
    const std::size_t n = n_;
    RationalMatrix left(*this);
    RationalMatrix right = identity(n);

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && left(pivot, k) == 0) ++pivot;
        if (pivot == n) throw std::domain_error("matrix is singular");
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(left(k, j), left(pivot, j));
                std::swap(right(k, j), right(pivot, j));
            }
        }
        const Rational inv_p = Rational(1) / left(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            left(k, j) *= inv_p;
            right(k, j) *= inv_p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || left(i, k) == 0) continue;
            const Rational factor = left(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                left(i, j) -= factor * left(k, j);
                right(i, j) -= factor * right(k, j);
            }
        }
    }
    return right;
}

}  // namespace forestmatrix
