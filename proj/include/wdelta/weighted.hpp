#ifndef WDELTA_WEIGHTED_HPP
#define WDELTA_WEIGHTED_HPP

#include <functional>
#include <map>

#include "wdelta/fan.hpp"
#include "wdelta/rational_function.hpp"
#include "wdelta/report.hpp"

namespace wdelta {

// Piecewise Q-linear function on the fan support, determined by its values
// on the b_i (linear on each simplicial cone).
struct Lambda {
    VecQ on_b;  // one value per ray

    static Lambda zero(int num_rays) { return Lambda{VecQ(num_rays, Rational(0))}; }

    bool is_zero() const;
    bool all_above_minus_one() const;  // needed to specialize s := t
    bool all_nonnegative() const;      // needed for per-class polynomiality
    Rational min_one_plus() const;     // min_i (1 + lambda(b_i))
    Rational sum() const;

    Rational value(const StackyFan& F, const Point& v) const;
    Rational value_on_box(const BoxElement& e) const;
};

// f^lambda_k(0..M) per weight class k.
struct WeightTable {
    i64 horizon = 0;
    std::map<Rational, std::vector<i64>> counts;

    std::vector<i64> totals() const;  // f_Q(0..M)
};

// Visits every v in |Sigma| cap N with psi(v) <= M exactly once. The
// visitor receives v, psi(v), the maximal-cone index and the coordinates
// of v on that cone's rays (zeros included).
void scan_support(const StackyFan& F, i64 M,
                  const std::function<void(const Point&, const Rational&, int, const VecQ&)>& visit);

Rational weight(const StackyFan& F, const Lambda& lam, const Point& v);

WeightTable count_weights(const StackyFan& F, const Lambda& lam, i64 M);

struct ClassDelta {
    std::map<Rational, FracPoly> by_class;
    bool truncated = false;  // true when some lambda(b_i) < 0: series truncations
    i64 horizon = 0;
};

// (1-t)^{d+1} sum_m f_k(m) t^m per class, via finite differences of the
// count table. Polynomiality is asserted when lambda >= 0.
ClassDelta delta_by_class(const StackyFan& F, const Lambda& lam, i64 M);

struct WeightedDelta {
    ClassDelta classes;
    BiFracPoly bivariate;   // sum_k delta_k(t) s^k
    FracPoly specialized;   // s := t
    FracPoly delta_Q;       // s := 1
};

WeightedDelta weighted_delta(const StackyFan& F, const Lambda& lam, i64 M);

// Local formulas over cones and box elements.
FracPoly delta0_local(const StackyFan& F);
BiFracPoly delta0_bivariate_local(const StackyFan& F);
// Betke-McMullen: sum over (tau, v in BOX(tau)) of t^ceil(psi(v)) h_tau(t).
FracPoly betke_mcmullen_local(const StackyFan& F);

// Weighted h-vector of the star of tau, evaluated exactly at s = u^scale,
// where scale is any positive common denominator of the lambda values.
Rational weighted_h_eval(const StackyFan& F, const Cone& tau, const Lambda& lam,
                         const Rational& u, const mpz_class& scale, const Rational& t);
// Right-hand side of the dual expansion of t^codim(tau) h(1/s, 1/t).
Rational weighted_h_dual_eval(const StackyFan& F, const Cone& tau, const Lambda& lam,
                              const Rational& u, const mpz_class& scale, const Rational& t);
// s := t symbolically, as a rational function in t^(1/N).
RationalFunction weighted_h_rf(const StackyFan& F, const Cone& tau, const Lambda& lam);

// Closed-form weighted delta-vector as a rational function (requires
// lambda(b_i) > -1 on every ray).
RationalFunction delta_lambda_local(const StackyFan& F, const Lambda& lam);

// (1-t)^d sum over lattice points of t^{psi(v)+lambda(v)}, truncated to
// exponents <= order: the counting-side series of the weighted delta.
FracPoly delta_lambda_direct_series(const StackyFan& F, const Lambda& lam, const Rational& order);

Report verify_symmetry(const StackyFan& F, const Lambda& lam);

struct BetkeMcMullen {
    FracPoly a;  // weight-class-0 part, palindromic of degree d
    FracPoly b;  // shifted fractional classes, palindromic of degree d-1
};
BetkeMcMullen betke_mcmullen_decomposition(const StackyFan& F);

Report change_of_variables_check(const StackyFan& F_fine, const Lambda& lam,
                                 const StackyFan& F_coarse, i64 M);

// Exact coefficient identities of the weighted delta-vector: value at t=1
// against the simplex-decomposition volume, constant term, the t
// coefficient against the boundary lattice count, and the fractional
// coefficients against direct level counts.
Report verify_delta0_identities(const StackyFan& F);

// d! * vol(Q) as the sum of |det| over maximal cones.
i64 fan_normalized_volume(const StackyFan& F);
// |{v : psi(v) = level}| for 0 <= level <= 1.
i64 count_psi_level(const StackyFan& F, const Rational& level);

} // namespace wdelta

#endif
