#include "excisive/matrix.hpp"

#include "excisive/errors.hpp"

#include <algorithm>
#include <utility>

namespace exc {

RatMatrix to_rational(const IntMatrix& m)
{
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out(r, c) = Rational(m(r, c));
    return out;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b)
{
    require(a.cols() == b.rows(), "matrix dimension mismatch");
    RatMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) {
            Rational acc = 0;
            for (std::size_t k = 0; k < a.cols(); ++k)
                acc += a(r, k) * b(k, c);
            acc.canonicalize();
            out(r, c) = acc;
        }
    return out;
}

BigInt determinant(const IntMatrix& input)
{
    require(input.rows() == input.cols(), "determinant of a non-square matrix");
    const std::size_t n = input.rows();
    if (n == 0)
        return 1;
    IntMatrix a = input;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a(swap_row, k) == 0)
                ++swap_row;
            if (swap_row == n)
                return 0;
            for (std::size_t c = 0; c < n; ++c)
                std::swap(a(k, c), a(swap_row, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = v;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

RatMatrix lower_triangular_inverse(const IntMatrix& m)
{
    require(m.rows() == m.cols(), "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    for (std::size_t r = 0; r < n; ++r) {
        require(m(r, r) != 0, "singular triangular matrix");
        for (std::size_t c = r + 1; c < n; ++c)
            require(m(r, c) == 0, "matrix is not lower triangular");
    }
    // Column c of the inverse solves M x = e_c.
    RatMatrix inv(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < n; ++r) {
            Rational acc = r == c ? 1 : 0;
            for (std::size_t k = 0; k < r; ++k)
                acc -= Rational(m(r, k)) * inv(k, c);
            acc /= Rational(m(r, r));
            acc.canonicalize();
            inv(r, c) = acc;
        }
    }
    return inv;
}

std::vector<BigInt> smith_invariants(IntMatrix a)
{
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    const std::size_t n = std::min(rows, cols);

    auto swap_rows = [&](std::size_t x, std::size_t y) {
        for (std::size_t c = 0; c < cols; ++c)
            std::swap(a(x, c), a(y, c));
    };
    auto swap_cols = [&](std::size_t x, std::size_t y) {
        for (std::size_t r = 0; r < rows; ++r)
            std::swap(a(r, x), a(r, y));
    };

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // Pivot: nonzero entry of least absolute value in the trailing block.
            bool found = false;
            std::size_t pr = t, pc = t;
            for (std::size_t r = t; r < rows; ++r)
                for (std::size_t c = t; c < cols; ++c)
                    if (a(r, c) != 0 && (!found || abs(a(r, c)) < abs(a(pr, pc)))) {
                        found = true;
                        pr = r;
                        pc = c;
                    }
            if (!found)
                break;
            swap_rows(t, pr);
            swap_cols(t, pc);

            bool clean = true;
            BigInt q;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (a(r, t) == 0)
                    continue;
                mpz_fdiv_q(q.get_mpz_t(), a(r, t).get_mpz_t(), a(t, t).get_mpz_t());
                for (std::size_t c = t; c < cols; ++c)
                    a(r, c) -= q * a(t, c);
                if (a(r, t) != 0)
                    clean = false;
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (a(t, c) == 0)
                    continue;
                mpz_fdiv_q(q.get_mpz_t(), a(t, c).get_mpz_t(), a(t, t).get_mpz_t());
                for (std::size_t r = t; r < rows; ++r)
                    a(r, c) -= q * a(r, t);
                if (a(t, c) != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            // Row and column are clear; enforce divisibility of the remaining block.
            std::size_t bad_r = rows;
            for (std::size_t r = t + 1; r < rows && bad_r == rows; ++r)
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (a(r, c) % a(t, t) != 0) {
                        bad_r = r;
                        break;
                    }
            if (bad_r == rows)
                break;
            for (std::size_t c = t; c < cols; ++c)
                a(t, c) += a(bad_r, c);
        }
    }

    std::vector<BigInt> diag(n);
    for (std::size_t t = 0; t < n; ++t)
        diag[t] = abs(a(t, t));
    return diag;
}

std::map<BigInt, int> primary_decomposition(const std::vector<BigInt>& orders)
{
    std::map<BigInt, int> out;
    for (const BigInt& order : orders) {
        require(order != 0, "primary_decomposition: infinite cyclic summand");
        BigInt rest = abs(order);
        for (BigInt q = 2; q * q <= rest; ++q) {
            if (rest % q != 0)
                continue;
            BigInt power = 1;
            while (rest % q == 0) {
                rest /= q;
                power *= q;
            }
            ++out[power];
        }
        if (rest > 1)
            ++out[rest];
    }
    return out;
}

} // namespace exc
