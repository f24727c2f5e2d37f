#include "wdelta/linalg.hpp"

#include <algorithm>
#include <cstdlib>

#include "wdelta/error.hpp"

namespace wdelta {

MatQ MatQ::from_columns(const std::vector<VecQ>& columns) {
    if (columns.empty()) return MatQ(0, 0);
    MatQ m(static_cast<int>(columns[0].size()), static_cast<int>(columns.size()));
    for (int j = 0; j < m.cols; ++j) {
        if (static_cast<int>(columns[j].size()) != m.rows)
            throw error("InvalidArgument", "ragged column list");
        for (int i = 0; i < m.rows; ++i) m.at(i, j) = columns[j][i];
    }
    return m;
}

namespace {

// Returns (solution, rank_ok, consistent) by Gauss-Jordan on [A | b].
std::optional<VecQ> gauss(const MatQ& A, const VecQ& b, bool* rank_deficient) {
    if (static_cast<int>(b.size()) != A.rows)
        throw error("InvalidArgument", "solve_linear: rhs size mismatch");
    int r = A.rows, c = A.cols;
    MatQ m(r, c + 1);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < c; ++j) m.at(i, j) = A.at(i, j);
        m.at(i, c) = b[i];
    }
    *rank_deficient = false;
    int row = 0;
    std::vector<int> pivot_row(c, -1);
    for (int col = 0; col < c && row < r; ++col) {
        int p = -1;
        for (int i = row; i < r; ++i)
            if (!m.at(i, col).is_zero()) { p = i; break; }
        if (p < 0) { *rank_deficient = true; return std::nullopt; }
        if (p != row)
            for (int j = col; j <= c; ++j) std::swap(m.at(p, j), m.at(row, j));
        Rational inv = Rational(1) / m.at(row, col);
        for (int j = col; j <= c; ++j) m.at(row, j) *= inv;
        for (int i = 0; i < r; ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Rational f = m.at(i, col);
            for (int j = col; j <= c; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivot_row[col] = row;
        ++row;
    }
    if (row < c) { *rank_deficient = true; return std::nullopt; }
    for (int i = row; i < r; ++i)
        if (!m.at(i, c).is_zero()) return std::nullopt;  // inconsistent
    VecQ x(c);
    for (int j = 0; j < c; ++j) x[j] = m.at(pivot_row[j], c);
    return x;
}

} // namespace

VecQ solve_linear(const MatQ& A, const VecQ& b) {
    bool rank_deficient = false;
    auto x = gauss(A, b, &rank_deficient);
    if (rank_deficient) throw error("RankDeficient", "matrix does not have full column rank");
    if (!x) throw error("Inconsistent", "system has no solution");
    return *x;
}

std::optional<VecQ> try_solve_linear(const MatQ& A, const VecQ& b) {
    bool rank_deficient = false;
    return gauss(A, b, &rank_deficient);
}

int rank(MatQ m) {
    int r = m.rows, c = m.cols;
    int rk = 0;
    for (int col = 0; col < c && rk < r; ++col) {
        int p = -1;
        for (int i = rk; i < r; ++i)
            if (!m.at(i, col).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != rk)
            for (int j = 0; j < c; ++j) std::swap(m.at(p, j), m.at(rk, j));
        for (int i = rk + 1; i < r; ++i) {
            if (m.at(i, col).is_zero()) continue;
            Rational f = m.at(i, col) / m.at(rk, col);
            for (int j = col; j < c; ++j) m.at(i, j) -= f * m.at(rk, j);
        }
        ++rk;
    }
    return rk;
}

i64 idet(const IMat& m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    i64 det = 0;
    for (int j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        IMat minor(n - 1, IVec(n - 1));
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[i - 1][cc++] = m[i][c];
            }
        }
        i64 cof = m[0][j] * idet(minor);
        det += (j % 2 == 0) ? cof : -cof;
    }
    return det;
}

IMat iadjugate(const IMat& m) {
    int n = static_cast<int>(m.size());
    IMat adj(n, IVec(n));
    if (n == 1) {
        adj[0][0] = 1;
        return adj;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            IMat minor(n - 1, IVec(n - 1));
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor[rr][cc++] = m[r][c];
                }
                ++rr;
            }
            i64 cof = idet(minor);
            adj[j][i] = ((i + j) % 2 == 0) ? cof : -cof;  // transpose of cofactors
        }
    }
    return adj;
}

IVec imatvec(const IMat& m, const IVec& v) {
    IVec r(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

i64 igcd(i64 a, i64 b) {
    a = std::llabs(a);
    b = std::llabs(b);
    while (b) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i64 gcd_maximal_minors(const IMat& m, int k) {
    int d = static_cast<int>(m.size());
    if (k == 0) return 1;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    i64 g = 0;
    while (true) {
        IMat sub(k, IVec(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub[i][j] = m[idx[i]][j];
        g = igcd(g, idet(sub));
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == d - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return g;
}

} // namespace wdelta
