#pragma once

#include "excisive/bigint.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace exc {

/// Dense row-major matrix with value semantics.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const IntMatrix& m);

/// Inverse of an invertible lower-triangular matrix by forward substitution.
RatMatrix lower_triangular_inverse(const IntMatrix& m);

/// Diagonal of the Smith normal form: non-negative d_1 | d_2 | ... , one per
/// min(rows, cols), units included. Pivots are chosen by least absolute value
/// to keep intermediate entries small.
std::vector<BigInt> smith_invariants(IntMatrix m);

/// Multiset {prime power -> multiplicity} of the cyclic decomposition of
/// ⊕ Z/n_i. Units contribute nothing; a zero entry throws (infinite summand).
std::map<BigInt, int> primary_decomposition(const std::vector<BigInt>& orders);

} // namespace exc
