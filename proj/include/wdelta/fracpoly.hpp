#ifndef WDELTA_FRACPOLY_HPP
#define WDELTA_FRACPOLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wdelta/rational.hpp"

namespace wdelta {

// Finitely supported polynomial in one variable t with rational exponents.
// Negative exponents are allowed (needed for t -> 1/t substitutions); no
// zero coefficients are stored. Coefficients are exact rationals; callers
// that require integrality assert it via has_integer_coefficients().
class FracPoly {
public:
    using Terms = std::map<Rational, Rational>;

    FracPoly() = default;

    static FracPoly zero() { return FracPoly(); }
    static FracPoly one() { return term(Rational(1), Rational(0)); }
    static FracPoly variable() { return term(Rational(1), Rational(1)); }
    static FracPoly term(const Rational& coeff, const Rational& exponent);
    // p(t) = coeffs[0] + coeffs[1] t + ... with integer exponents.
    static FracPoly from_coeffs(const std::vector<Rational>& coeffs);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    Rational coeff(const Rational& exponent) const;
    void add_term(const Rational& coeff, const Rational& exponent);

    Rational min_exponent() const;  // requires nonzero
    Rational max_exponent() const;  // requires nonzero

    // lcm of exponent denominators; 1 for the zero polynomial.
    mpz_class exponent_denominator() const;
    bool has_integer_coefficients() const;
    bool has_integer_exponents() const;
    bool has_nonnegative_coefficients() const;

    FracPoly operator-() const;
    FracPoly& operator+=(const FracPoly& o);
    FracPoly& operator-=(const FracPoly& o);
    friend FracPoly operator+(FracPoly a, const FracPoly& b) { return a += b; }
    friend FracPoly operator-(FracPoly a, const FracPoly& b) { return a -= b; }
    friend FracPoly operator*(const FracPoly& a, const FracPoly& b);
    FracPoly& operator*=(const FracPoly& o) { return *this = *this * o; }
    friend bool operator==(const FracPoly& a, const FracPoly& b) { return a.terms_ == b.terms_; }

    FracPoly scaled(const Rational& c) const;
    FracPoly pow(unsigned k) const;

    // t^d p(1/t): exponent e -> d - e. An involution for fixed d.
    FracPoly reversed(const Rational& d) const;
    // p(1/t): exponent e -> -e.
    FracPoly inverted_variable() const;
    // t^e0 * p(t).
    FracPoly shifted(const Rational& e0) const;
    // Drop terms with exponent > order.
    FracPoly truncated(const Rational& order) const;

    // Evaluate at t = u^(1/scale): t^e |-> u^(e*scale); every e*scale must
    // be an integer (scale a positive multiple of exponent_denominator()).
    Rational eval_scaled(const Rational& u, const mpz_class& scale) const;
    // Evaluate with integer exponents only.
    Rational eval(const Rational& t) const;

    // Golden-format rendering: ascending exponents, "p/q" exponents in
    // parentheses, e.g. "1 + 2*t^(1/2) + 4*t + t^2". Zero renders as "0".
    std::string str() const;

private:
    Terms terms_;
};

// (1-t)^k, cached for small k.
FracPoly one_minus_t_pow(unsigned k);

// Finitely supported polynomial in s and t with rational exponents.
class BiFracPoly {
public:
    using Key = std::pair<Rational, Rational>;  // (s-exponent, t-exponent)
    using Terms = std::map<Key, Rational>;

    BiFracPoly() = default;

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    void add_term(const Rational& coeff, const Rational& s_exp, const Rational& t_exp);

    BiFracPoly& operator+=(const BiFracPoly& o);
    friend bool operator==(const BiFracPoly& a, const BiFracPoly& b) { return a.terms_ == b.terms_; }

    FracPoly substitute_s(const Rational& s_value) const;  // s := rational value
    FracPoly substitute_s_equals_t() const;                // s := t, exponents add

    std::string str() const;

private:
    Terms terms_;
};

} // namespace wdelta

#endif
