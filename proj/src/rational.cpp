#include "wdelta/rational.hpp"

namespace wdelta {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw error("ParseError", "empty rational literal");
    auto bad = [&] { throw error("ParseError", "malformed rational literal '" + s + "'"); };
    std::string nums, dens;
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        nums = s;
        dens = "1";
    } else {
        nums = s.substr(0, slash);
        dens = s.substr(slash + 1);
    }
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    if (!is_int(nums) || !is_int(dens)) bad();
    mpz_class n(nums), d(dens);
    if (d == 0) throw error("ZeroDenominator", "rational literal '" + s + "'");
    return Rational(n, d);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw error("ZeroDenominator", "0 raised to a negative power");
        return Rational(0);
    }
    bool inv = e < 0;
    unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), k);
    return inv ? Rational(d, n) : Rational(n, d);
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

mpz_class lcm_denominator(const mpz_class& a, const mpz_class& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

} // namespace wdelta
