#pragma once

#include <cassert>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "openbook/errors.hpp"

namespace openbook {

// Overflow-checked 64-bit arithmetic.  All matrix computations in this
// library are exact; on overflow they throw instead of wrapping.
inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
    return r;
}
inline long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError();
    return r;
}
inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
    return r;
}
// Exact division; the callers below only divide when divisibility is guaranteed.
inline long long div_exact(long long a, long long b) {
    assert(b != 0 && a % b == 0);
    return a / b;
}

// Dense integer matrix, row-major.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    long long& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    long long at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    bool operator==(const Matrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }
};

inline Matrix mat_mul(const Matrix& x, const Matrix& y) {
    assert(x.cols == y.rows);
    Matrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            long long xv = x.at(i, k);
            if (xv == 0) continue;
            for (int j = 0; j < y.cols; ++j)
                r.at(i, j) = checked_add(r.at(i, j), checked_mul(xv, y.at(k, j)));
        }
    return r;
}

inline Matrix mat_sub(const Matrix& x, const Matrix& y) {
    assert(x.rows == y.rows && x.cols == y.cols);
    Matrix r(x.rows, x.cols);
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = checked_sub(x.a[i], y.a[i]);
    return r;
}

inline Matrix mat_pow(const Matrix& m, long long e) {
    assert(m.rows == m.cols && e >= 0);
    Matrix r = Matrix::identity(m.rows);
    for (long long i = 0; i < e; ++i) r = mat_mul(r, m);
    return r;
}

// Rank over Q by fraction-free (Bareiss) elimination.
inline int mat_rank(Matrix m) {
    int r = 0;
    long long prev = 1;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        for (int i = r + 1; i < m.rows; ++i) {
            for (int j = c + 1; j < m.cols; ++j)
                m.at(i, j) = div_exact(
                    checked_sub(checked_mul(m.at(r, c), m.at(i, j)),
                                checked_mul(m.at(r, j), m.at(i, c))),
                    prev);
            m.at(i, c) = 0;
        }
        prev = m.at(r, c);
        ++r;
    }
    return r;
}

// Determinant by Bareiss elimination.
inline long long mat_det(Matrix m) {
    assert(m.rows == m.cols);
    int n = m.rows;
    if (n == 0) return 1;
    long long prev = 1;
    int sign = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (m.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
            sign = -sign;
        }
        for (int i = c + 1; i < n; ++i) {
            for (int j = c + 1; j < n; ++j)
                m.at(i, j) = div_exact(
                    checked_sub(checked_mul(m.at(c, c), m.at(i, j)),
                                checked_mul(m.at(c, j), m.at(i, c))),
                    prev);
            m.at(i, c) = 0;
        }
        prev = m.at(c, c);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : checked_sub(0, m.at(n - 1, n - 1));
}

// Smith normal form data: nonnegative diagonal with d1 | d2 | ..., the rank
// (number of nonzero diagonal entries) and the invariant factors > 1.
struct SmithResult {
    std::vector<long long> diagonal;
    int rank = 0;
    std::vector<long long> torsion;
};

inline SmithResult smith_normal_form(Matrix m) {
    const int n = std::min(m.rows, m.cols);
    int t = 0;
    while (t < n) {
        // Locate a minimal-magnitude nonzero pivot in the remaining block.
        int pi = -1, pj = -1;
        for (int i = t; i < m.rows; ++i)
            for (int j = t; j < m.cols; ++j)
                if (m.at(i, j) != 0 &&
                    (pi < 0 || std::llabs(m.at(i, j)) < std::llabs(m.at(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        if (pi != t)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pi, j), m.at(t, j));
        if (pj != t)
            for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, pj), m.at(i, t));

        bool clean = true;
        for (int i = t + 1; i < m.rows && clean; ++i)
            if (m.at(i, t) != 0) {
                long long q = m.at(i, t) / m.at(t, t);
                for (int j = t; j < m.cols; ++j)
                    m.at(i, j) = checked_sub(m.at(i, j), checked_mul(q, m.at(t, j)));
                if (m.at(i, t) != 0) clean = false;  // remainder: revisit pivot choice
            }
        if (clean)
            for (int j = t + 1; j < m.cols && clean; ++j)
                if (m.at(t, j) != 0) {
                    long long q = m.at(t, j) / m.at(t, t);
                    for (int i = t; i < m.rows; ++i)
                        m.at(i, j) = checked_sub(m.at(i, j), checked_mul(q, m.at(i, t)));
                    if (m.at(t, j) != 0) clean = false;
                }
        if (!clean) continue;  // smaller remainders now exist; pick pivot again

        // Row and column t are clear.  If the pivot fails to divide some entry
        // of the remaining block, fold that row in and reprocess.
        bool divides = true;
        for (int i = t + 1; i < m.rows && divides; ++i)
            for (int j = t + 1; j < m.cols && divides; ++j)
                if (m.at(i, j) % m.at(t, t) != 0) {
                    for (int jj = t; jj < m.cols; ++jj)
                        m.at(t, jj) = checked_add(m.at(t, jj), m.at(i, jj));
                    divides = false;
                }
        if (divides) ++t;
    }

    SmithResult res;
    for (int i = 0; i < n; ++i) {
        long long d = i < m.rows && i < m.cols ? m.at(i, i) : 0;
        res.diagonal.push_back(d < 0 ? checked_sub(0, d) : d);
    }
    for (long long d : res.diagonal)
        if (d != 0) ++res.rank;
    for (long long d : res.diagonal)
        if (d > 1) res.torsion.push_back(d);
    return res;
}

// Characteristic polynomial coefficients c[0..n] with c[n] = 1, by the
// Faddeev-LeVerrier recurrence (all internal divisions are exact).
inline std::vector<long long> char_poly(const Matrix& m) {
    assert(m.rows == m.cols);
    int n = m.rows;
    std::vector<long long> c(static_cast<std::size_t>(n) + 1, 0);
    c[static_cast<std::size_t>(n)] = 1;
    Matrix mk = m;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            Matrix shifted = mk;
            long long ck = c[static_cast<std::size_t>(n - k + 1)];
            for (int i = 0; i < n; ++i)
                shifted.at(i, i) = checked_add(shifted.at(i, i), ck);
            mk = mat_mul(m, shifted);
        }
        long long tr = 0;
        for (int i = 0; i < n; ++i) tr = checked_add(tr, mk.at(i, i));
        c[static_cast<std::size_t>(n - k)] = div_exact(checked_sub(0, tr), k);
    }
    return c;
}

// Inverse of a matrix with determinant +-1, via the adjugate.
inline Matrix inverse_unimodular(const Matrix& m) {
    assert(m.rows == m.cols);
    int n = m.rows;
    long long det = mat_det(m);
    if (det != 1 && det != -1)
        throw SemanticError("matrix is not unimodular; no integer inverse");
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix minor(n - 1, n - 1);
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(rr, cc) = m.at(r, c);
                    ++cc;
                }
                ++rr;
            }
            long long cof = mat_det(minor);
            if ((i + j) % 2 != 0) cof = checked_sub(0, cof);
            inv.at(j, i) = det == 1 ? cof : checked_sub(0, cof);
        }
    return inv;
}

}  // namespace openbook
