#ifndef WDELTA_RATIONAL_FUNCTION_HPP
#define WDELTA_RATIONAL_FUNCTION_HPP

#include "wdelta/fracpoly.hpp"

namespace wdelta {

// Quotient of two FracPolys. No gcd reduction is performed; equality is
// cross-multiplication equality.
class RationalFunction {
public:
    RationalFunction() : num_(FracPoly::zero()), den_(FracPoly::one()) {}
    RationalFunction(FracPoly num, FracPoly den);
    explicit RationalFunction(const FracPoly& p) : num_(p), den_(FracPoly::one()) {}

    const FracPoly& num() const { return num_; }
    const FracPoly& den() const { return den_; }

    bool equals(const RationalFunction& o) const { return num_ * o.den_ == o.num_ * den_; }

    RationalFunction operator+(const RationalFunction& o) const {
        return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RationalFunction operator*(const RationalFunction& o) const {
        return RationalFunction(num_ * o.num_, den_ * o.den_);
    }

    // t -> 1/t on both numerator and denominator.
    RationalFunction inverted_variable() const {
        return RationalFunction(num_.inverted_variable(), den_.inverted_variable());
    }

    // Ascending fractional power series of num/den, truncated to exponents
    // <= order. Coefficients may be rational.
    FracPoly expand(const Rational& order) const;

private:
    FracPoly num_, den_;
};

} // namespace wdelta

#endif
