#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <utility>
#include <vector>

#include "orbihom/error.hpp"

namespace orbihom {

/// Exact integer type used for weights and matrix entries.  Boundary maps of
/// weighted complexes carry lcm ratios that overflow fixed width quickly.
using Integer = mpz_class;

inline Integer gcd(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer lcm(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool divides(const Integer& a, const Integer& b)
{
    return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

/// Dense row-major matrix over arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;

    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols)
    {
        if (rows < 0 || cols < 0)
            fail(ErrorCode::DimensionMismatch, "negative matrix dimensions");
    }

    static IntMatrix identity(int n)
    {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Integer& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Integer& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    bool operator==(const IntMatrix& other) const
    {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }
    bool operator!=(const IntMatrix& other) const { return !(*this == other); }

    bool is_zero() const
    {
        for (const Integer& x : data_)
            if (sgn(x) != 0)
                return false;
        return true;
    }

    IntMatrix operator*(const IntMatrix& rhs) const
    {
        if (cols_ != rhs.rows_)
            fail(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
        IntMatrix out(rows_, rhs.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Integer& a = at(i, k);
                if (sgn(a) == 0)
                    continue;
                for (int j = 0; j < rhs.cols_; ++j) {
                    const Integer& b = rhs.at(k, j);
                    if (sgn(b) != 0)
                        out.at(i, j) += a * b;
                }
            }
        return out;
    }

    std::vector<Integer> mul_vec(const std::vector<Integer>& v) const
    {
        if (static_cast<int>(v.size()) != cols_)
            fail(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
        std::vector<Integer> out(rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                const Integer& a = at(i, j);
                if (sgn(a) != 0)
                    out[i] += a * v[j];
            }
        return out;
    }

    std::vector<Integer> column(int j) const
    {
        std::vector<Integer> out(rows_);
        for (int i = 0; i < rows_; ++i)
            out[i] = at(i, j);
        return out;
    }

    void set_column(int j, const std::vector<Integer>& v)
    {
        for (int i = 0; i < rows_; ++i)
            at(i, j) = v[i];
    }

    // In-place elementary operations (building blocks for Smith reduction).
    void swap_rows(int i, int j)
    {
        if (i == j)
            return;
        for (int c = 0; c < cols_; ++c)
            std::swap(at(i, c), at(j, c));
    }

    void swap_cols(int i, int j)
    {
        if (i == j)
            return;
        for (int r = 0; r < rows_; ++r)
            std::swap(at(r, i), at(r, j));
    }

    /// row_dst += q * row_src
    void row_addmul(int dst, int src, const Integer& q)
    {
        if (sgn(q) == 0)
            return;
        for (int c = 0; c < cols_; ++c) {
            const Integer& s = at(src, c);
            if (sgn(s) != 0)
                mpz_addmul(at(dst, c).get_mpz_t(), q.get_mpz_t(), s.get_mpz_t());
        }
    }

    /// col_dst += q * col_src
    void col_addmul(int dst, int src, const Integer& q)
    {
        if (sgn(q) == 0)
            return;
        for (int r = 0; r < rows_; ++r) {
            const Integer& s = at(r, src);
            if (sgn(s) != 0)
                mpz_addmul(at(r, dst).get_mpz_t(), q.get_mpz_t(), s.get_mpz_t());
        }
    }

    void negate_row(int i)
    {
        for (int c = 0; c < cols_; ++c)
            at(i, c) = -at(i, c);
    }

    void negate_col(int j)
    {
        for (int r = 0; r < rows_; ++r)
            at(r, j) = -at(r, j);
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Integer> data_;
};

} // namespace orbihom
