#include "wdelta/rational_function.hpp"

namespace wdelta {

RationalFunction::RationalFunction(FracPoly num, FracPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw error("ZeroDenominator", "rational function with zero denominator");
}

FracPoly RationalFunction::expand(const Rational& order) const {
    if (num_.is_zero()) return FracPoly::zero();
    // Normalize so the denominator has a nonzero constant term.
    Rational e0 = den_.min_exponent();
    FracPoly den = den_.shifted(-e0);
    FracPoly rem = num_.shifted(-e0);
    Rational c0 = den.coeff(Rational(0));
    FracPoly tail = den;
    tail.add_term(-c0, Rational(0));

    // Long division by ascending exponents; the minimal exponent of the
    // remainder strictly increases each step within a fixed 1/N lattice.
    FracPoly result;
    while (!rem.is_zero()) {
        Rational e = rem.min_exponent();
        if (e > order) break;
        Rational a = rem.coeff(e) / c0;
        result.add_term(a, e);
        rem.add_term(-rem.coeff(e), e);
        rem -= tail.shifted(e).scaled(a);
    }
    return result;
}

} // namespace wdelta
