#ifndef WDELTA_LINALG_HPP
#define WDELTA_LINALG_HPP

#include <optional>
#include <vector>

#include "wdelta/rational.hpp"

namespace wdelta {

using VecQ = std::vector<Rational>;

// Dense rectangular matrix of exact rationals.
struct MatQ {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> a;

    MatQ() = default;
    MatQ(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Rational& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rational& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static MatQ from_columns(const std::vector<VecQ>& columns);
};

// Exact solve of Ax = b for full-column-rank A. Throws RankDeficient when
// the columns are dependent and Inconsistent when no solution exists.
VecQ solve_linear(const MatQ& A, const VecQ& b);

// Non-throwing variant: nullopt when rank-deficient or inconsistent.
std::optional<VecQ> try_solve_linear(const MatQ& A, const VecQ& b);

int rank(MatQ A);

// ---- small exact integer kernels (lattice data is int64 at desk scale) ----

using i64 = long long;
using IVec = std::vector<i64>;
using IMat = std::vector<IVec>;  // row-major

i64 idet(const IMat& m);
// adj(m) with adj(m) * m = det(m) * I.
IMat iadjugate(const IMat& m);
IVec imatvec(const IMat& m, const IVec& v);
i64 igcd(i64 a, i64 b);
// gcd of all k x k minors of a d x k matrix of rank k (index of the column
// span's integer lattice inside its saturation).
i64 gcd_maximal_minors(const IMat& m, int k);

} // namespace wdelta

#endif
