/**
 * Dense exact-integer matrices, Smith normal form, and rational elimination.
 *
 * Everything here is arbitrary precision (boost cpp_int / cpp_rational);
 * entry growth during elimination is the classic failure mode, so the SNF
 * pivot rule always picks a minimal-absolute-value entry.
 */

#ifndef CUTCERT_MATRIX_HPP
#define CUTCERT_MATRIX_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <utility>
#include <vector>

#include "cutcert/errors.hpp"

namespace cutcert {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct IntegerMatrix {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IntegerMatrix() = default;
    IntegerMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static IntegerMatrix identity(int n) {
        IntegerMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    IntegerMatrix operator*(const IntegerMatrix& other) const {
        IntegerMatrix out(rows, other.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                const Int& v = at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < other.cols; ++j)
                    out.at(i, j) += v * other.at(k, j);
            }
        return out;
    }

    bool operator==(const IntegerMatrix& other) const {
        return rows == other.rows && cols == other.cols && a == other.a;
    }

    std::vector<Int> apply(const std::vector<Int>& x) const {
        if (static_cast<int>(x.size()) != cols)
            throw DimensionMismatchError("matrix-vector size mismatch");
        std::vector<Int> y(rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (at(i, j) != 0 && x[j] != 0) y[i] += at(i, j) * x[j];
        return y;
    }

    std::vector<Int> apply_transpose(const std::vector<Int>& x) const {
        if (static_cast<int>(x.size()) != rows)
            throw DimensionMismatchError("matrix-vector size mismatch");
        std::vector<Int> y(cols);
        for (int i = 0; i < rows; ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < cols; ++j)
                if (at(i, j) != 0) y[j] += at(i, j) * x[i];
        }
        return y;
    }
};

/**
 * Smith normal form U*A*V = D with unimodular U, V. Uinv and Vinv track the
 * inverse transforms so kernel and quotient bases can be read off directly.
 */
struct SNFResult {
    IntegerMatrix D, U, V, Uinv, Vinv;
    int rank = 0;
    std::vector<Int> invariant_factors;  // d1 | d2 | ... , all positive
};

inline SNFResult smith_normal_form(const IntegerMatrix& A) {
    SNFResult r;
    r.D = A;
    int n = A.rows, m = A.cols;
    r.U = IntegerMatrix::identity(n);
    r.Uinv = IntegerMatrix::identity(n);
    r.V = IntegerMatrix::identity(m);
    r.Vinv = IntegerMatrix::identity(m);
    IntegerMatrix& D = r.D;

    // elementary operations, mirrored onto the transforms
    auto row_swap = [&](int i, int j) {
        if (i == j) return;
        for (int c = 0; c < m; ++c) std::swap(D.at(i, c), D.at(j, c));
        for (int c = 0; c < n; ++c) std::swap(r.U.at(i, c), r.U.at(j, c));
        for (int rr = 0; rr < n; ++rr) std::swap(r.Uinv.at(rr, i), r.Uinv.at(rr, j));
    };
    auto col_swap = [&](int i, int j) {
        if (i == j) return;
        for (int rr = 0; rr < n; ++rr) std::swap(D.at(rr, i), D.at(rr, j));
        for (int rr = 0; rr < m; ++rr) std::swap(r.V.at(rr, i), r.V.at(rr, j));
        for (int c = 0; c < m; ++c) std::swap(r.Vinv.at(i, c), r.Vinv.at(j, c));
    };
    // R_i += q * R_j
    auto row_add = [&](int i, int j, const Int& q) {
        if (q == 0) return;
        for (int c = 0; c < m; ++c) D.at(i, c) += q * D.at(j, c);
        for (int c = 0; c < n; ++c) r.U.at(i, c) += q * r.U.at(j, c);
        for (int rr = 0; rr < n; ++rr) r.Uinv.at(rr, j) -= q * r.Uinv.at(rr, i);
    };
    // C_i += q * C_j
    auto col_add = [&](int i, int j, const Int& q) {
        if (q == 0) return;
        for (int rr = 0; rr < n; ++rr) D.at(rr, i) += q * D.at(rr, j);
        for (int rr = 0; rr < m; ++rr) r.V.at(rr, i) += q * r.V.at(rr, j);
        for (int c = 0; c < m; ++c) r.Vinv.at(j, c) -= q * r.Vinv.at(i, c);
    };
    auto row_negate = [&](int i) {
        for (int c = 0; c < m; ++c) D.at(i, c) = -D.at(i, c);
        for (int c = 0; c < n; ++c) r.U.at(i, c) = -r.U.at(i, c);
        for (int rr = 0; rr < n; ++rr) r.Uinv.at(rr, i) = -r.Uinv.at(rr, i);
    };

    int t = 0;
    int limit = std::min(n, m);
    while (t < limit) {
        // minimal-absolute-value pivot in the trailing submatrix, rows first
        int pi = -1, pj = -1;
        Int best = 0;
        for (int i = t; i < n; ++i)
            for (int j = t; j < m; ++j) {
                const Int& v = D.at(i, j);
                if (v == 0) continue;
                Int av = abs(v);
                if (pi < 0 || av < best) {
                    best = av;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;  // submatrix is zero
        row_swap(t, pi);
        col_swap(t, pj);
        if (D.at(t, t) < 0) row_negate(t);

        bool clean = true;
        for (int i = t + 1; i < n; ++i) {
            if (D.at(i, t) == 0) continue;
            Int q = D.at(i, t) / D.at(t, t);
            // round toward minimizing the remainder
            row_add(i, t, -q);
            if (D.at(i, t) != 0) clean = false;
        }
        for (int j = t + 1; j < m; ++j) {
            if (D.at(t, j) == 0) continue;
            Int q = D.at(t, j) / D.at(t, t);
            col_add(j, t, -q);
            if (D.at(t, j) != 0) clean = false;
        }
        if (!clean) continue;  // re-pick a smaller pivot

        // enforce divisibility: pivot must divide the whole trailing block
        bool divides = true;
        for (int i = t + 1; i < n && divides; ++i)
            for (int j = t + 1; j < m; ++j)
                if (D.at(i, j) % D.at(t, t) != 0) {
                    row_add(t, i, 1);  // pull the offending row up, redo this pivot
                    divides = false;
                    break;
                }
        if (!divides) continue;
        ++t;
    }
    r.rank = t;
    for (int i = 0; i < t; ++i) r.invariant_factors.push_back(D.at(i, i));
    return r;
}

// -------------------------------------------------------------------------
// Rational elimination (used for the coboundary decision)
// -------------------------------------------------------------------------

struct RationalMatrix {
    int rows = 0, cols = 0;
    std::vector<Rational> a;

    RationalMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    Rational& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rational& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

// Row-reduce in place; returns pivot columns.
inline std::vector<int> row_reduce(RationalMatrix& M) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < M.cols && row < M.rows; ++col) {
        int p = -1;
        for (int i = row; i < M.rows; ++i)
            if (M.at(i, col) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < M.cols; ++j) std::swap(M.at(p, j), M.at(row, j));
        Rational inv = 1 / M.at(row, col);
        for (int j = 0; j < M.cols; ++j) M.at(row, j) *= inv;
        for (int i = 0; i < M.rows; ++i) {
            if (i == row || M.at(i, col) == 0) continue;
            Rational f = M.at(i, col);
            for (int j = 0; j < M.cols; ++j) M.at(i, j) -= f * M.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Is A x = b solvable over the rationals?
inline bool rational_solvable(const IntegerMatrix& A, const std::vector<Int>& b) {
    if (static_cast<int>(b.size()) != A.rows)
        throw DimensionMismatchError("rhs size mismatch");
    RationalMatrix M(A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) M.at(i, j) = Rational(A.at(i, j));
        M.at(i, A.cols) = Rational(b[i]);
    }
    auto pivots = row_reduce(M);
    for (int c : pivots)
        if (c == A.cols) return false;  // pivot in the augmented column
    return true;
}

}  // namespace cutcert

#endif  // CUTCERT_MATRIX_HPP
