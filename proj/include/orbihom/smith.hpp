#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "orbihom/matrix.hpp"

namespace orbihom {

/// Smith normal form U*M*V = D with D diagonal, d_1 | d_2 | ... | d_r > 0.
/// Inverse transforms are maintained alongside U and V so that kernels and
/// integer linear systems can be read off without a separate inversion pass.
struct SmithDecomposition {
    IntMatrix D;
    int rank = 0;
    bool has_transforms = false;
    IntMatrix U, V;       // U*M*V = D
    IntMatrix Uinv, Vinv; // Uinv*D*Vinv = M

    std::vector<Integer> invariant_factors() const
    {
        std::vector<Integer> out;
        out.reserve(rank);
        for (int i = 0; i < rank; ++i)
            out.push_back(D.at(i, i));
        return out;
    }
};

/// Elimination with pivot selection by minimal nonzero absolute value and a
/// full-submatrix divisibility correction before each pivot is retired.
/// Desk-scale matrices only; transforms double the work, so they are built
/// on request.
inline SmithDecomposition smith_normal_form(IntMatrix M, bool want_transforms = false)
{
    const int nr = M.rows();
    const int nc = M.cols();

    SmithDecomposition s;
    s.has_transforms = want_transforms;
    if (want_transforms) {
        s.U = IntMatrix::identity(nr);
        s.Uinv = IntMatrix::identity(nr);
        s.V = IntMatrix::identity(nc);
        s.Vinv = IntMatrix::identity(nc);
    }

    auto row_swap = [&](int i, int j) {
        if (i == j)
            return;
        M.swap_rows(i, j);
        if (want_transforms) {
            s.U.swap_rows(i, j);
            s.Uinv.swap_cols(i, j);
        }
    };
    auto col_swap = [&](int i, int j) {
        if (i == j)
            return;
        M.swap_cols(i, j);
        if (want_transforms) {
            s.V.swap_cols(i, j);
            s.Vinv.swap_rows(i, j);
        }
    };
    // row_dst += q*row_src corresponds to U <- L*U, Uinv <- Uinv*L^{-1}.
    auto row_addmul = [&](int dst, int src, const Integer& q) {
        M.row_addmul(dst, src, q);
        if (want_transforms) {
            s.U.row_addmul(dst, src, q);
            s.Uinv.col_addmul(src, dst, -q);
        }
    };
    auto col_addmul = [&](int dst, int src, const Integer& q) {
        M.col_addmul(dst, src, q);
        if (want_transforms) {
            s.V.col_addmul(dst, src, q);
            s.Vinv.row_addmul(src, dst, -q);
        }
    };
    auto row_negate = [&](int i) {
        M.negate_row(i);
        if (want_transforms) {
            s.U.negate_row(i);
            s.Uinv.negate_col(i);
        }
    };

    const int tmax = std::min(nr, nc);
    int t = 0;
    while (t < tmax) {
        // Pivot: smallest nonzero absolute value in the trailing submatrix.
        int pr = -1, pc = -1;
        bool unit = false;
        for (int r = t; r < nr && !unit; ++r)
            for (int c = t; c < nc; ++c) {
                const Integer& x = M.at(r, c);
                if (sgn(x) == 0)
                    continue;
                if (pr < 0 || mpz_cmpabs(x.get_mpz_t(), M.at(pr, pc).get_mpz_t()) < 0) {
                    pr = r;
                    pc = c;
                }
                if (mpz_cmpabs_ui(x.get_mpz_t(), 1) == 0) {
                    unit = true;
                    break;
                }
            }
        if (pr < 0)
            break; // trailing submatrix is zero
        row_swap(t, pr);
        col_swap(t, pc);

        for (;;) {
            bool restart = false;
            // Clear the pivot column; a nonzero remainder is strictly smaller
            // than the pivot and becomes the new pivot.
            for (int r = t + 1; r < nr; ++r) {
                if (sgn(M.at(r, t)) == 0)
                    continue;
                Integer q = M.at(r, t) / M.at(t, t);
                if (sgn(q) != 0)
                    row_addmul(r, t, -q);
                if (sgn(M.at(r, t)) != 0) {
                    row_swap(t, r);
                    restart = true;
                    break;
                }
            }
            if (restart)
                continue;
            for (int c = t + 1; c < nc; ++c) {
                if (sgn(M.at(t, c)) == 0)
                    continue;
                Integer q = M.at(t, c) / M.at(t, t);
                if (sgn(q) != 0)
                    col_addmul(c, t, -q);
                if (sgn(M.at(t, c)) != 0) {
                    col_swap(t, c);
                    restart = true;
                    break;
                }
            }
            if (restart)
                continue;
            // Divisibility correction: the pivot must divide the whole
            // trailing submatrix for d_1 | d_2 | ... to hold.
            const Integer& piv = M.at(t, t);
            bool fixed = true;
            for (int r = t + 1; r < nr && fixed; ++r)
                for (int c = t + 1; c < nc; ++c)
                    if (!divides(piv, M.at(r, c))) {
                        row_addmul(t, r, Integer(1));
                        fixed = false;
                        break;
                    }
            if (fixed)
                break;
        }

        if (sgn(M.at(t, t)) < 0)
            row_negate(t);
        ++t;
    }

    s.rank = t;
    s.D = std::move(M);
    return s;
}

inline int rank_of(const IntMatrix& m)
{
    return smith_normal_form(m, false).rank;
}

/// Finitely generated abelian group in invariant-factor form:
/// Z^rank + Z/d_1 + ... with 2 <= d_1 | d_2 | ...
struct HomologyGroup {
    int rank = 0;
    std::vector<Integer> torsion;

    bool operator==(const HomologyGroup& other) const
    {
        return rank == other.rank && torsion == other.torsion;
    }
    bool operator!=(const HomologyGroup& other) const { return !(*this == other); }

    bool is_trivial() const { return rank == 0 && torsion.empty(); }

    Integer torsion_order() const
    {
        Integer t = 1;
        for (const Integer& d : torsion)
            t *= d;
        return t;
    }
};

/// H_n = ker(d_n) / im(d_{n+1}) for a chain complex with n-th basis of the
/// given size.  Torsion comes out of the invariant factors of d_{n+1}.
inline HomologyGroup homology_from_boundaries(const IntMatrix& d_n, const IntMatrix& d_np1, int n_basis_size)
{
    if (d_n.cols() != n_basis_size || d_np1.rows() != n_basis_size)
        fail(ErrorCode::DimensionMismatch,
             "expected cols(d_n) = " + std::to_string(n_basis_size) + " = rows(d_{n+1})");
    if (!(d_n * d_np1).is_zero())
        fail(ErrorCode::CompositionNotZero, "d_n * d_{n+1} != 0; boundary construction is broken upstream");

    SmithDecomposition outer = smith_normal_form(d_n, false);
    SmithDecomposition inner = smith_normal_form(d_np1, false);

    HomologyGroup g;
    g.rank = n_basis_size - outer.rank - inner.rank;
    for (const Integer& d : inner.invariant_factors())
        if (d >= 2)
            g.torsion.push_back(d);
    return g;
}

/// Invariant-factor form of a direct sum of cyclic groups Z/orders[i]
/// (order 0 means a Z summand).  Used for homology with Z/m coefficients.
inline HomologyGroup normalize_cyclic_sum(const std::vector<Integer>& orders)
{
    HomologyGroup g;
    std::vector<Integer> finite;
    for (const Integer& d : orders) {
        if (sgn(d) == 0)
            ++g.rank;
        else if (d != 1)
            finite.push_back(d);
    }
    if (!finite.empty()) {
        IntMatrix diag(static_cast<int>(finite.size()), static_cast<int>(finite.size()));
        for (int i = 0; i < static_cast<int>(finite.size()); ++i)
            diag.at(i, i) = finite[i];
        for (const Integer& d : smith_normal_form(diag, false).invariant_factors())
            if (d >= 2)
                g.torsion.push_back(d);
    }
    return g;
}

} // namespace orbihom
