#include "wdelta/fracpoly.hpp"

#include <mutex>

namespace wdelta {

FracPoly FracPoly::term(const Rational& coeff, const Rational& exponent) {
    FracPoly p;
    p.add_term(coeff, exponent);
    return p;
}

FracPoly FracPoly::from_coeffs(const std::vector<Rational>& coeffs) {
    FracPoly p;
    for (size_t i = 0; i < coeffs.size(); ++i)
        p.add_term(coeffs[i], Rational(static_cast<long long>(i)));
    return p;
}

Rational FracPoly::coeff(const Rational& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

void FracPoly::add_term(const Rational& coeff, const Rational& exponent) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational FracPoly::min_exponent() const {
    if (is_zero()) throw error("InvalidArgument", "min_exponent of zero polynomial");
    return terms_.begin()->first;
}

Rational FracPoly::max_exponent() const {
    if (is_zero()) throw error("InvalidArgument", "max_exponent of zero polynomial");
    return terms_.rbegin()->first;
}

mpz_class FracPoly::exponent_denominator() const {
    mpz_class n(1);
    for (const auto& [e, c] : terms_) n = lcm_denominator(n, e.den());
    return n;
}

bool FracPoly::has_integer_coefficients() const {
    for (const auto& [e, c] : terms_)
        if (!c.is_integer()) return false;
    return true;
}

bool FracPoly::has_integer_exponents() const {
    for (const auto& [e, c] : terms_)
        if (!e.is_integer()) return false;
    return true;
}

bool FracPoly::has_nonnegative_coefficients() const {
    for (const auto& [e, c] : terms_)
        if (c.sign() < 0) return false;
    return true;
}

FracPoly FracPoly::operator-() const {
    FracPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

FracPoly& FracPoly::operator+=(const FracPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(c, e);
    return *this;
}

FracPoly& FracPoly::operator-=(const FracPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(-c, e);
    return *this;
}

FracPoly operator*(const FracPoly& a, const FracPoly& b) {
    FracPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ca * cb, ea + eb);
    return r;
}

FracPoly FracPoly::scaled(const Rational& c) const {
    FracPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

FracPoly FracPoly::pow(unsigned k) const {
    FracPoly r = one();
    FracPoly base = *this;
    while (k) {
        if (k & 1u) r = r * base;
        base = base * base;
        k >>= 1u;
    }
    return r;
}

FracPoly FracPoly::reversed(const Rational& d) const {
    FracPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(d - e, c);
    return r;
}

FracPoly FracPoly::inverted_variable() const {
    FracPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

FracPoly FracPoly::shifted(const Rational& e0) const {
    FracPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + e0, c);
    return r;
}

FracPoly FracPoly::truncated(const Rational& order) const {
    FracPoly r;
    for (const auto& [e, c] : terms_) {
        if (e > order) break;
        r.terms_.emplace(e, c);
    }
    return r;
}

Rational FracPoly::eval_scaled(const Rational& u, const mpz_class& scale) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational se = e * Rational(scale);
        if (!se.is_integer())
            throw error("InvalidArgument", "eval_scaled: exponent " + e.str() +
                                               " not integral at scale " + scale.get_str());
        if (!se.num().fits_slong_p())
            throw error("InvalidArgument", "eval_scaled: exponent too large");
        acc += c * u.pow(se.num().get_si());
    }
    return acc;
}

Rational FracPoly::eval(const Rational& t) const { return eval_scaled(t, 1); }

namespace {

std::string render_term_body(const Rational& e) {
    if (e.is_zero()) return "";
    if (e == Rational(1)) return "t";
    if (e.is_integer() && e.sign() > 0) return "t^" + e.str();
    return "t^(" + e.str() + ")";
}

} // namespace

std::string FracPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = c.sign() < 0 ? -c : c;
        std::string body = render_term_body(e);
        std::string piece;
        if (body.empty())
            piece = mag.str();
        else if (mag == Rational(1))
            piece = body;
        else
            piece = mag.str() + "*" + body;
        if (first) {
            out = (c.sign() < 0 ? "-" : "") + piece;
            first = false;
        } else {
            out += (c.sign() < 0 ? " - " : " + ") + piece;
        }
    }
    return out;
}

FracPoly one_minus_t_pow(unsigned k) {
    static std::mutex mu;
    static std::vector<FracPoly> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (cache.empty()) cache.push_back(FracPoly::one());
    FracPoly base = FracPoly::one() - FracPoly::variable();
    while (cache.size() <= k) cache.push_back(cache.back() * base);
    return cache[k];
}

void BiFracPoly::add_term(const Rational& coeff, const Rational& s_exp, const Rational& t_exp) {
    if (coeff.is_zero()) return;
    Key key{s_exp, t_exp};
    auto [it, inserted] = terms_.emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BiFracPoly& BiFracPoly::operator+=(const BiFracPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(c, k.first, k.second);
    return *this;
}

FracPoly BiFracPoly::substitute_s(const Rational& s_value) const {
    FracPoly r;
    for (const auto& [k, c] : terms_) {
        const auto& [se, te] = k;
        if (s_value == Rational(1)) {
            r.add_term(c, te);
            continue;
        }
        if (!se.is_integer())
            throw error("InvalidArgument",
                        "substitute_s: fractional s-exponent needs s = 1 or s := t");
        if (!se.num().fits_slong_p()) throw error("InvalidArgument", "s-exponent too large");
        r.add_term(c * s_value.pow(se.num().get_si()), te);
    }
    return r;
}

FracPoly BiFracPoly::substitute_s_equals_t() const {
    FracPoly r;
    for (const auto& [k, c] : terms_) r.add_term(c, k.first + k.second);
    return r;
}

std::string BiFracPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        std::string piece = c.str() + "*s^(" + k.first.str() + ")*t^(" + k.second.str() + ")";
        out += first ? piece : " + " + piece;
        first = false;
    }
    return out;
}

} // namespace wdelta
