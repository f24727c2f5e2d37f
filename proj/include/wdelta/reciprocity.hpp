#ifndef WDELTA_RECIPROCITY_HPP
#define WDELTA_RECIPROCITY_HPP

#include "wdelta/weighted.hpp"

namespace wdelta {

// f^0_k(m) as an exact polynomial: interpolated through m = 0..d and
// verified against the counts up to verified_horizon.
struct ClassPolynomial {
    Rational k;
    VecQ coeffs;  // c_0..c_d
    i64 verified_horizon = 0;

    bool is_zero() const;
    Rational eval(i64 m) const { return eval_polynomial(coeffs, Rational(m)); }
};

ClassPolynomial interpolate_class(const StackyFan& F, const Rational& k, i64 M);
std::map<Rational, ClassPolynomial> interpolate_all_classes(const StackyFan& F, i64 M);
// Same interpolation applied to a precomputed weight table.
std::map<Rational, ClassPolynomial> interpolate_classes(const WeightTable& table, int d);

// f^0_k(-m) = (-1)^d f^0_{-1-k}(m) for -1 < k < 0, and
// f^0_0(-m) = (-1)^d f^0_0(m-1), for m = 1..M_eval (complete fans only).
Report verify_weighted_reciprocity(const StackyFan& F, i64 M_eval);

// (-1)^d f_Q(-m) equals the interior lattice count of mQ, m = 1..M_eval.
Report verify_ehrhart_reciprocity(const LatticePolytope& P, i64 M_eval);
Report verify_ehrhart_reciprocity_fan(const StackyFan& F, i64 M_eval);

// f_Q(m) - (-1)^d f_Q(-m) = f^0_0(m) - f^0_0(m-1) for m = 1..d+1; both
// sides count the boundary lattice points of the dilate.
Report verify_boundary_count_identity(const StackyFan& F, const VecQ& fq_poly);

// d = 2 closed forms on complete fans: f^0_0(m) = |bd Q cap N| m(m+1)/2 + 1
// and the paired quadratic form for the fractional classes.
Report verify_d2_closed_forms(const StackyFan& F);

struct HibiResult {
    bool palindromic = false;
    bool psi_piecewise_linear = false;
};
// Palindromy of delta_Q versus integrality of psi on BOX(Sigma); the two
// must agree on complete fans.
HibiResult hibi_check(const StackyFan& F);
Report verify_hibi(const StackyFan& F);

struct OrbifoldBetti {
    struct Sector {
        Cone tau;
        Point v;
        FracPoly h;  // h-vector of the quotient fan of tau
    };
    std::map<Rational, i64> dims;  // j -> dim H^{2j}
    std::vector<Sector> sectors;
};

OrbifoldBetti orbifold_betti(const StackyFan& F);
// delta_i = sum of dims(j) over i-1 < j <= i.
std::vector<i64> group_betti_to_delta(const OrbifoldBetti& B, int d);
Report verify_betti_grouping(const StackyFan& F, const FracPoly& delta_Q_reference);

struct Triangulation {
    std::vector<Point> points;
    std::vector<std::vector<int>> simplices;  // point-index lists, size d+1
};

// Pulling triangulation of the vertex set, pulled from the given vertex.
Triangulation default_pull_triangulation(const LatticePolytope& P, int vertex = 0);

// Canonical-stack fan over the cone on P x {1}, refined by T.
StackyFan pyramid_fan(const LatticePolytope& P, const Triangulation& T);

// The delta-vector of P recovered as the weighted delta-vector of the
// pyramid fan (checked against the direct route internally).
FracPoly pyramid_delta(const LatticePolytope& P, const Triangulation& T);

} // namespace wdelta

#endif
