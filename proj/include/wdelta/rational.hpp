#ifndef WDELTA_RATIONAL_HPP
#define WDELTA_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <string>

#include "wdelta/error.hpp"

namespace wdelta {

// Exact rational scalar. Always in lowest terms, denominator > 0.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<long int>(n)) {}
    Rational(long long n) { set_ll(n, 1); }
    Rational(long long num, long long den) { set_ll(num, den); }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw error("ZeroDenominator", "rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Accepts "p", "-p", "p/q" with optional sign; q > 0 after canonicalization.
    static Rational parse(const std::string& s);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    mpz_class floor() const {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        return q;
    }
    mpz_class ceil() const {
        mpz_class q;
        mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        return q;
    }
    Rational floor_r() const { return Rational(floor()); }
    Rational ceil_r() const { return Rational(ceil()); }
    Rational frac() const { return *this - floor_r(); }  // in [0,1)

    Rational operator-() const { Rational r; r.v_ = -v_; return r; }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw error("ZeroDenominator", "division by zero rational");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // Integer power; negative exponents require a nonzero base.
    Rational pow(long e) const;

    // "p" when integral, "p/q" otherwise.
    std::string str() const;

private:
    void set_ll(long long num, long long den) {
        if (den == 0) throw error("ZeroDenominator", "rational with zero denominator");
        mpz_class n, d;
        mpz_set_si(n.get_mpz_t(), num);
        mpz_set_si(d.get_mpz_t(), den);
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }

    mpq_class v_;
};

// lcm of the denominators' values, as a positive integer.
mpz_class lcm_denominator(const mpz_class& a, const mpz_class& b);

} // namespace wdelta

#endif
