#include "wdelta/weighted.hpp"

#include <algorithm>

#include "wdelta/error.hpp"

namespace wdelta {

bool Lambda::is_zero() const {
    for (const auto& x : on_b)
        if (!x.is_zero()) return false;
    return true;
}

bool Lambda::all_above_minus_one() const {
    for (const auto& x : on_b)
        if (x <= Rational(-1)) return false;
    return true;
}

bool Lambda::all_nonnegative() const {
    for (const auto& x : on_b)
        if (x.sign() < 0) return false;
    return true;
}

Rational Lambda::min_one_plus() const {
    Rational m(1);
    for (const auto& x : on_b) m = std::min(m, Rational(1) + x);
    return m;
}

Rational Lambda::sum() const {
    Rational s(0);
    for (const auto& x : on_b) s += x;
    return s;
}

Rational Lambda::value(const StackyFan& F, const Point& v) const {
    Located loc = F.locate(v);
    Rational acc(0);
    for (size_t j = 0; j < loc.carrier.size(); ++j) acc += loc.coords[j] * on_b[loc.carrier[j]];
    return acc;
}

Rational Lambda::value_on_box(const BoxElement& e) const {
    Rational acc(0);
    for (size_t j = 0; j < e.tau.size(); ++j) acc += e.q[j] * on_b[e.tau[j]];
    return acc;
}

std::vector<i64> WeightTable::totals() const {
    std::vector<i64> t(horizon + 1, 0);
    for (const auto& [k, f] : counts)
        for (size_t m = 0; m < f.size(); ++m) t[m] += f[m];
    return t;
}

void scan_support(const StackyFan& F, i64 M,
                  const std::function<void(const Point&, const Rational&, int, const VecQ&)>& visit) {
    int d = F.rank();
    for (int mc = 0; mc < static_cast<int>(F.max_cones().size()); ++mc) {
        const IMat& adj = F.max_cone_adj(mc);
        i64 det = F.max_cone_det(mc);
        i64 s = det > 0 ? 1 : -1;
        i64 absdet = det * s;
        const Cone& rays = F.max_cones()[mc];
        Point lo, hi;
        F.cone_scan_box(mc, M, lo, hi);
        Point v = lo;
        IVec nums(d);
        while (true) {
            bool inside = true;
            i64 psi_num = 0;
            for (int i = 0; i < d && inside; ++i) {
                i64 acc = 0;
                for (int j = 0; j < d; ++j) acc += adj[i][j] * v[j];
                acc *= s;
                if (acc < 0) inside = false;
                nums[i] = acc;
                psi_num += acc;
            }
            if (inside && psi_num <= M * absdet) {
                Cone carrier;
                for (int i = 0; i < d; ++i)
                    if (nums[i] != 0) carrier.push_back(rays[i]);
                if (F.owner_of(carrier) == mc) {
                    VecQ coords(d);
                    for (int i = 0; i < d; ++i) coords[i] = Rational(nums[i], absdet);
                    visit(v, Rational(psi_num, absdet), mc, coords);
                }
            }
            int j = d - 1;
            while (j >= 0 && v[j] == hi[j]) {
                v[j] = lo[j];
                --j;
            }
            if (j < 0) break;
            ++v[j];
        }
    }
}

Rational weight(const StackyFan& F, const Lambda& lam, const Point& v) {
    Located loc = F.locate(v);
    Rational psi(0), lv(0);
    for (size_t j = 0; j < loc.carrier.size(); ++j) {
        psi += loc.coords[j];
        lv += loc.coords[j] * lam.on_b[loc.carrier[j]];
    }
    return psi - psi.ceil_r() + lv;
}

WeightTable count_weights(const StackyFan& F, const Lambda& lam, i64 M) {
    if (M < 0) throw error("InvalidArgument", "negative horizon");
    if (static_cast<int>(lam.on_b.size()) != F.num_rays())
        throw error("InvalidArgument", "lambda value count does not match ray count");
    WeightTable table;
    table.horizon = M;
    bool zero_lambda = lam.is_zero();
    bool check_nonneg = !lam.all_nonnegative();
    scan_support(F, M, [&](const Point&, const Rational& psi, int mc, const VecQ& coords) {
        Rational lv(0);
        if (!zero_lambda) {
            const Cone& rays = F.max_cones()[mc];
            for (size_t j = 0; j < coords.size(); ++j)
                if (!coords[j].is_zero()) lv += coords[j] * lam.on_b[rays[j]];
            if (check_nonneg && psi + lv < Rational(0))
                throw error("InvariantViolated",
                            "psi + lambda is negative at an enumerated lattice point");
        }
        Rational k = psi - psi.ceil_r() + lv;
        auto [it, inserted] = table.counts.emplace(k, std::vector<i64>());
        if (inserted) it->second.assign(M + 1, 0);
        i64 first = std::max<i64>(0, psi.ceil().get_si());
        for (i64 m = first; m <= M; ++m) ++it->second[m];
    });
    return table;
}

ClassDelta delta_by_class(const StackyFan& F, const Lambda& lam, i64 M) {
    int d = F.rank();
    if (lam.all_nonnegative() && M < 2 * d + 2)
        throw error("InvalidArgument", "horizon must be at least 2d+2");
    WeightTable table = count_weights(F, lam, M);

    std::vector<i64> binom(d + 2, 1);
    for (int j = 1; j <= d + 1; ++j) binom[j] = binom[j - 1] * (d + 2 - j) / j;

    ClassDelta out;
    out.horizon = M;
    out.truncated = !lam.all_nonnegative();
    i64 degree_bound = lam.is_zero() ? d : M - (d + 1);
    for (const auto& [k, f] : table.counts) {
        FracPoly p;
        for (i64 i = 0; i <= M; ++i) {
            i64 acc = 0;
            for (int j = 0; j <= d + 1 && j <= i; ++j)
                acc += (j % 2 ? -1 : 1) * binom[j] * f[i - j];
            if (acc == 0) continue;
            if (!out.truncated && i > degree_bound)
                throw error("NotPolynomialAtHorizon",
                            "class " + k.str() + " has a nonzero difference at t^" +
                                std::to_string(i) + "; horizon too small or a counting bug");
            p.add_term(Rational(acc), Rational(i));
        }
        out.by_class.emplace(k, std::move(p));
    }
    return out;
}

WeightedDelta weighted_delta(const StackyFan& F, const Lambda& lam, i64 M) {
    if (!lam.all_above_minus_one())
        throw error("LambdaOutOfRange", "specialization s := t requires lambda(b_i) > -1");
    WeightedDelta wd;
    wd.classes = delta_by_class(F, lam, M);
    for (const auto& [k, p] : wd.classes.by_class) {
        for (const auto& [e, c] : p.terms()) wd.bivariate.add_term(c, k, e);
        wd.specialized += p.shifted(k);
        wd.delta_Q += p;
    }
    if (lam.is_zero()) {
        int d = F.rank();
        if (!wd.specialized.has_integer_coefficients() ||
            !wd.specialized.has_nonnegative_coefficients() ||
            wd.specialized.coeff(Rational(0)) != Rational(1) ||
            wd.specialized.max_exponent() > Rational(d))
            throw error("InvariantViolated", "delta0 shape violates its guarantees");
        for (const auto& [k, p] : wd.classes.by_class) {
            if (k > Rational(0) || k <= Rational(-1))
                throw error("InvariantViolated", "weight class outside (-1,0]");
            if (!p.is_zero() && (!p.has_nonnegative_coefficients() || p.max_exponent() > Rational(d)))
                throw error("InvariantViolated", "class polynomial shape violates its guarantees");
        }
    }
    return wd;
}

FracPoly delta0_local(const StackyFan& F) {
    FracPoly acc;
    for (const auto& tau : F.cones()) {
        const auto& elems = F.box(tau);
        if (elems.empty()) continue;
        FracPoly h = F.h_vector(tau);
        for (const auto& e : elems) acc += h.shifted(e.psi);
    }
    return acc;
}

BiFracPoly delta0_bivariate_local(const StackyFan& F) {
    BiFracPoly acc;
    for (const auto& tau : F.cones()) {
        const auto& elems = F.box(tau);
        if (elems.empty()) continue;
        FracPoly h = F.h_vector(tau);
        for (const auto& e : elems) {
            Rational up = Rational(e.psi.ceil());
            Rational s_exp = e.psi - up;
            for (const auto& [i, c] : h.terms()) acc.add_term(c, s_exp, up + i);
        }
    }
    return acc;
}

FracPoly betke_mcmullen_local(const StackyFan& F) {
    return delta0_bivariate_local(F).substitute_s(Rational(1));
}

namespace {

long integral_exponent(const Rational& lam_i, const mpz_class& scale) {
    Rational e = lam_i * Rational(scale);
    if (!e.is_integer())
        throw error("InvalidArgument",
                    "scale " + scale.get_str() + " is not a common denominator of lambda");
    if (!e.num().fits_slong_p()) throw error("InvalidArgument", "lambda exponent too large");
    return e.num().get_si();
}

} // namespace

Rational weighted_h_eval(const StackyFan& F, const Cone& tau, const Lambda& lam,
                         const Rational& u, const mpz_class& scale, const Rational& t) {
    if (!F.has_cone(tau)) throw error("ConeNotInFan", "weighted h-vector of a cone not in the fan");
    Rational one(1);
    Rational acc(0);
    for (const auto& sigma : F.cones()) {
        if (!std::includes(sigma.begin(), sigma.end(), tau.begin(), tau.end())) continue;
        Rational term = t.pow(static_cast<long>(sigma.size() - tau.size())) *
                        (one - t).pow(F.codim(sigma));
        for (int i : sigma) {
            if (std::binary_search(tau.begin(), tau.end(), i)) continue;
            Rational s_l = u.pow(integral_exponent(lam.on_b[i], scale));
            Rational den = one - s_l * t;
            if (den.is_zero())
                throw error("PoleAtEvaluationPoint", "1 - s^lambda t vanishes at the chosen point");
            term *= s_l * (one - t) / den;
        }
        acc += term;
    }
    return acc;
}

Rational weighted_h_dual_eval(const StackyFan& F, const Cone& tau, const Lambda& lam,
                              const Rational& u, const mpz_class& scale, const Rational& t) {
    if (!F.has_cone(tau)) throw error("ConeNotInFan", "weighted h-vector of a cone not in the fan");
    Rational one(1);
    Rational acc(0);
    for (const auto& sigma : F.cones()) {
        if (!std::includes(sigma.begin(), sigma.end(), tau.begin(), tau.end())) continue;
        Rational term = (t - one).pow(F.codim(sigma));
        for (int i : sigma) {
            if (std::binary_search(tau.begin(), tau.end(), i)) continue;
            Rational s_l = u.pow(integral_exponent(lam.on_b[i], scale));
            Rational den = s_l * t - one;
            if (den.is_zero())
                throw error("PoleAtEvaluationPoint", "s^lambda t - 1 vanishes at the chosen point");
            term *= (t - one) / den;
        }
        acc += term;
    }
    return acc;
}

RationalFunction weighted_h_rf(const StackyFan& F, const Cone& tau, const Lambda& lam) {
    if (!F.has_cone(tau)) throw error("ConeNotInFan", "weighted h-vector of a cone not in the fan");
    if (!lam.all_above_minus_one())
        throw error("LambdaOutOfRange", "s := t form requires lambda(b_i) > -1");
    auto ray_factor = [&](int i) {
        FracPoly f = FracPoly::one();
        f.add_term(Rational(-1), lam.on_b[i] + Rational(1));
        return f;  // 1 - t^(lambda_i + 1)
    };
    FracPoly den = FracPoly::one();
    for (int i = 0; i < F.num_rays(); ++i)
        if (!std::binary_search(tau.begin(), tau.end(), i)) den *= ray_factor(i);

    FracPoly num;
    for (const auto& sigma : F.cones()) {
        if (!std::includes(sigma.begin(), sigma.end(), tau.begin(), tau.end())) continue;
        Rational shift(0);
        for (int i : sigma)
            if (!std::binary_search(tau.begin(), tau.end(), i)) shift += lam.on_b[i] + Rational(1);
        FracPoly term = FracPoly::term(Rational(1), shift);
        term *= one_minus_t_pow(
            static_cast<unsigned>(F.codim(sigma) + sigma.size() - tau.size()));
        for (int i = 0; i < F.num_rays(); ++i)
            if (!std::binary_search(sigma.begin(), sigma.end(), i) &&
                !std::binary_search(tau.begin(), tau.end(), i))
                term *= ray_factor(i);
        num += term;
    }
    return RationalFunction(num, den);
}

RationalFunction delta_lambda_local(const StackyFan& F, const Lambda& lam) {
    if (static_cast<int>(lam.on_b.size()) != F.num_rays())
        throw error("InvalidArgument", "lambda value count does not match ray count");
    if (!lam.all_above_minus_one())
        throw error("LambdaOutOfRange", "local formula requires lambda(b_i) > -1");
    auto ray_factor = [&](int i) {
        FracPoly f = FracPoly::one();
        f.add_term(Rational(-1), lam.on_b[i] + Rational(1));
        return f;
    };
    FracPoly den = FracPoly::one();
    for (int i = 0; i < F.num_rays(); ++i) den *= ray_factor(i);

    FracPoly total;
    for (const auto& sigma : F.cones()) {
        FracPoly pout = FracPoly::one();
        for (int i = 0; i < F.num_rays(); ++i)
            if (!std::binary_search(sigma.begin(), sigma.end(), i)) pout *= ray_factor(i);
        // Sum over faces tau of sigma and v in BOX(tau) of
        // t^{psi(v) + lambda(v) + sum_{i in sigma \ tau} (lambda_i + 1)}.
        FracPoly inner;
        int n = static_cast<int>(sigma.size());
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            Cone tau;
            Rational shift(0);
            for (int i = 0; i < n; ++i) {
                if (mask & (1u << i))
                    tau.push_back(sigma[i]);
                else
                    shift += lam.on_b[sigma[i]] + Rational(1);
            }
            for (const auto& e : F.box(tau))
                inner.add_term(Rational(1), e.psi + lam.value_on_box(e) + shift);
        }
        total += pout * inner;
    }
    FracPoly num = one_minus_t_pow(static_cast<unsigned>(F.rank())) * total;
    return RationalFunction(num, den);
}

FracPoly delta_lambda_direct_series(const StackyFan& F, const Lambda& lam, const Rational& order) {
    if (!lam.all_above_minus_one())
        throw error("LambdaOutOfRange", "series requires lambda(b_i) > -1");
    Rational scan_to = order / lam.min_one_plus();
    i64 M = std::max<i64>(0, scan_to.ceil().get_si());
    bool zero_lambda = lam.is_zero();
    FracPoly pts;
    scan_support(F, M, [&](const Point&, const Rational& psi, int mc, const VecQ& coords) {
        Rational e = psi;
        if (!zero_lambda) {
            const Cone& rays = F.max_cones()[mc];
            for (size_t j = 0; j < coords.size(); ++j)
                if (!coords[j].is_zero()) e += coords[j] * lam.on_b[rays[j]];
        }
        if (e <= order) pts.add_term(Rational(1), e);
    });
    return (one_minus_t_pow(static_cast<unsigned>(F.rank())) * pts).truncated(order);
}

Report verify_symmetry(const StackyFan& F, const Lambda& lam) {
    Report rep;
    int d = F.rank();
    bool complete = F.is_complete();
    std::string hyp = std::string("complete: ") + (complete ? "true" : "false");
    if (!complete) {
        rep.skip("symmetry", "fan is not complete; symmetry is not asserted", hyp);
        return rep;
    }
    if (!lam.all_above_minus_one()) {
        rep.skip("symmetry", "some lambda(b_i) <= -1", hyp);
        return rep;
    }
    if (lam.is_zero()) {
        WeightedDelta wd = weighted_delta(F, lam, 2 * d + 2);
        if (wd.specialized == wd.specialized.reversed(Rational(d)))
            rep.pass("symmetry", hyp);
        else
            rep.fail("symmetry",
                     "delta0 = " + wd.specialized.str() + " vs reverse = " +
                         wd.specialized.reversed(Rational(d)).str(),
                     hyp);
        FracPoly zero_class;
        auto it = wd.classes.by_class.find(Rational(0));
        if (it != wd.classes.by_class.end()) zero_class = it->second;
        if (zero_class == zero_class.reversed(Rational(d)))
            rep.pass("symmetry_class_zero", hyp);
        else
            rep.fail("symmetry_class_zero", "delta0_0 = " + zero_class.str(), hyp);
        bool pairs_ok = true;
        std::string bad;
        for (const auto& [k, p] : wd.classes.by_class) {
            if (k.is_zero()) continue;
            Rational partner = Rational(-1) - k;
            FracPoly q;
            auto jt = wd.classes.by_class.find(partner);
            if (jt != wd.classes.by_class.end()) q = jt->second;
            if (p != q.reversed(Rational(d + 1))) {
                pairs_ok = false;
                bad = "class " + k.str();
                break;
            }
        }
        if (pairs_ok)
            rep.pass("symmetry_class_pairs", hyp);
        else
            rep.fail("symmetry_class_pairs", bad + " breaks the k <-> -1-k pairing", hyp);
    } else {
        RationalFunction R = delta_lambda_local(F, lam);
        FracPoly lhs = R.num() * R.den().inverted_variable();
        FracPoly rhs = R.num().inverted_variable().shifted(Rational(d)) * R.den();
        if (lhs == rhs)
            rep.pass("symmetry", hyp);
        else
            rep.fail("symmetry", "rational-function identity t^d delta(1/t) = delta(t) fails", hyp);
    }
    return rep;
}

BetkeMcMullen betke_mcmullen_decomposition(const StackyFan& F) {
    if (!F.is_complete())
        throw error("PreconditionUnmet", "decomposition requires a complete fan");
    int d = F.rank();
    WeightedDelta wd = weighted_delta(F, Lambda::zero(F.num_rays()), 2 * d + 2);
    BetkeMcMullen bm;
    for (const auto& [k, p] : wd.classes.by_class) {
        if (k.is_zero()) {
            bm.a = p;
            continue;
        }
        if (!p.coeff(Rational(0)).is_zero())
            throw error("InvariantViolated", "fractional class has a constant term");
        bm.b += p.shifted(Rational(-1));
    }
    FracPoly recombined = bm.a + bm.b.shifted(Rational(1));
    if (recombined != wd.delta_Q)
        throw error("InvariantViolated", "a(t) + t b(t) does not reproduce delta_Q");
    if (bm.a != bm.a.reversed(Rational(d)))
        throw error("InvariantViolated", "a(t) is not palindromic of degree d");
    if (!bm.b.is_zero() && bm.b != bm.b.reversed(Rational(d - 1)))
        throw error("InvariantViolated", "b(t) is not palindromic of degree d-1");
    return bm;
}

namespace {

std::set<Point> support_boundary_normals(const StackyFan& F) {
    std::set<Point> out;
    int d = F.rank();
    if (d < 2) return out;
    std::map<Cone, std::vector<int>> walls;
    for (int m = 0; m < static_cast<int>(F.max_cones().size()); ++m)
        for (int drop = 0; drop < d; ++drop) {
            Cone f = F.max_cones()[m];
            f.erase(f.begin() + drop);
            walls[f].push_back(m);
        }
    for (const auto& [f, owners] : walls) {
        if (owners.size() != 1) continue;
        std::vector<Point> gens;
        for (int i : f) gens.push_back(F.rays()[i].v);
        Point n = cofactor_normal(gens, d);
        int extra = -1;
        for (int i : F.max_cones()[owners[0]])
            if (!std::binary_search(f.begin(), f.end(), i)) extra = i;
        if (dot(n, F.rays()[extra].v) > 0)
            for (auto& x : n) x = -x;  // outward
        i64 g = content(n);
        for (auto& x : n) x /= g;
        out.insert(n);
    }
    return out;
}

} // namespace

Report change_of_variables_check(const StackyFan& F_sigma, const Lambda& lam,
                                 const StackyFan& F_delta, i64 M) {
    Report rep;
    if (F_sigma.rank() != F_delta.rank())
        throw error("SupportMismatch", "fans live in different ranks");
    if (!lam.all_above_minus_one())
        throw error("LambdaOutOfRange", "lambda(b_i) > -1 required on the source fan");

    bool both_complete = F_sigma.is_complete() && F_delta.is_complete();
    if (!both_complete) {
        if (F_sigma.is_complete() != F_delta.is_complete())
            throw error("SupportMismatch", "one fan is complete, the other is not");
        if (support_boundary_normals(F_sigma) != support_boundary_normals(F_delta))
            throw error("SupportMismatch", "support boundary hyperplanes differ");
        for (const auto& r : F_sigma.rays())
            if (!F_delta.try_locate(r.b))
                throw error("SupportMismatch", "a source ray leaves the target support");
        for (const auto& r : F_delta.rays())
            if (!F_sigma.try_locate(r.b))
                throw error("SupportMismatch", "a target ray leaves the source support");
    }

    // lambda' = lambda + psi_sigma - psi_delta, determined by its values on
    // the target rays.
    Lambda lam_prime;
    for (const auto& r : F_delta.rays())
        lam_prime.on_b.push_back(lam.value(F_sigma, r.b) + F_sigma.psi(r.b) - Rational(1));
    if (!lam_prime.all_above_minus_one()) {
        rep.skip("change_of_variables", "lambda'(b'_j) <= -1; the hypothesis fails",
                 "lambda_prime_in_range: false");
        return rep;
    }

    // Piecewise linearity of lambda' w.r.t. the target fan, refuted by
    // sampling integer combinations inside each maximal cone.
    for (const auto& sigma : F_delta.max_cones()) {
        int k = static_cast<int>(sigma.size());
        std::vector<IVec> samples;
        IVec ones(k, 1);
        samples.push_back(ones);
        for (int i = 0; i < k; ++i) {
            IVec w(k, 0);
            w[i] = 2;
            samples.push_back(w);
            IVec w2 = ones;
            w2[i] += 1;
            samples.push_back(w2);
            for (int j = i + 1; j < k; ++j) {
                IVec w3(k, 0);
                w3[i] = 1;
                w3[j] = 1;
                samples.push_back(w3);
                IVec w4(k, 0);
                w4[i] = 1;
                w4[j] = 2;
                samples.push_back(w4);
            }
        }
        for (const auto& w : samples) {
            Point v(F_delta.rank(), 0);
            Rational lin(0), wsum(0);
            for (int j = 0; j < k; ++j) {
                const Point& b = F_delta.rays()[sigma[j]].b;
                for (int i = 0; i < F_delta.rank(); ++i) v[i] += w[j] * b[i];
                lin += Rational(w[j]) * lam_prime.on_b[sigma[j]];
                wsum += Rational(w[j]);
            }
            Rational lhs = lin + wsum;  // lambda'(v) + psi_delta(v) under linearity
            Rational rhs = lam.value(F_sigma, v) + F_sigma.psi(v);
            if (lhs != rhs) {
                rep.skip("change_of_variables",
                         "lambda' is not piecewise linear w.r.t. the target fan; the "
                         "hypothesis fails",
                         "lambda_prime_piecewise_linear: false");
                return rep;
            }
        }
    }

    FracPoly s1 = delta_lambda_direct_series(F_sigma, lam, Rational(M));
    FracPoly s2 = delta_lambda_direct_series(F_delta, lam_prime, Rational(M));
    if (s1 == s2)
        rep.pass("change_of_variables", "lambda_prime_piecewise_linear: true");
    else
        rep.fail("change_of_variables",
                 "series differ: " + s1.str() + " vs " + s2.str(),
                 "lambda_prime_piecewise_linear: true");
    return rep;
}

i64 fan_normalized_volume(const StackyFan& F) {
    i64 total = 0;
    for (size_t m = 0; m < F.max_cones().size(); ++m) {
        i64 det = F.max_cone_det(static_cast<int>(m));
        total += det < 0 ? -det : det;
    }
    return total;
}

i64 count_psi_level(const StackyFan& F, const Rational& level) {
    i64 count = 0;
    scan_support(F, 1, [&](const Point&, const Rational& psi, int, const VecQ&) {
        if (psi == level) ++count;
    });
    return count;
}

Report verify_delta0_identities(const StackyFan& F) {
    Report rep;
    int d = F.rank();
    bool complete = F.is_complete();
    std::string hyp = std::string("complete: ") + (complete ? "true" : "false");
    if (!complete) {
        rep.skip("delta0_identities", "fan is not complete", hyp);
        return rep;
    }
    WeightedDelta wd = weighted_delta(F, Lambda::zero(F.num_rays()), 2 * d + 2);
    const FracPoly& d0 = wd.specialized;

    Rational at_one(0);
    for (const auto& [e, c] : d0.terms()) at_one += c;
    if (at_one == Rational(fan_normalized_volume(F)))
        rep.pass("delta0_at_one_equals_volume", hyp);
    else
        rep.fail("delta0_at_one_equals_volume",
                 "delta0(1) = " + at_one.str() + ", d! vol = " +
                     std::to_string(fan_normalized_volume(F)),
                 hyp);

    if (d0.coeff(Rational(0)) == Rational(1))
        rep.pass("delta0_constant_term", hyp);
    else
        rep.fail("delta0_constant_term", "constant term " + d0.coeff(Rational(0)).str(), hyp);

    // Fractional coefficients equal the psi-level counts inside Q; levels
    // present on either side are compared.
    std::map<Rational, i64> levels;
    scan_support(F, 1, [&](const Point&, const Rational& psi, int, const VecQ&) {
        if (psi > Rational(0) && psi < Rational(1)) ++levels[psi];
    });
    bool frac_ok = true;
    std::string bad;
    for (const auto& [e, c] : d0.terms())
        if (e > Rational(0) && e < Rational(1) && c != Rational(levels.count(e) ? levels[e] : 0)) {
            frac_ok = false;
            bad = "coefficient of t^" + e.str();
            break;
        }
    if (frac_ok)
        for (const auto& [l, n] : levels)
            if (d0.coeff(l) != Rational(n)) {
                frac_ok = false;
                bad = "level " + l.str();
                break;
            }
    if (frac_ok)
        rep.pass("delta0_fractional_coefficients", hyp);
    else
        rep.fail("delta0_fractional_coefficients", bad + " does not match the level count", hyp);

    i64 boundary = count_psi_level(F, Rational(1));
    if (d0.coeff(Rational(1)) == Rational(boundary - d))
        rep.pass("delta0_linear_coefficient", hyp);
    else
        rep.fail("delta0_linear_coefficient",
                 "coefficient of t is " + d0.coeff(Rational(1)).str() + ", boundary count - d = " +
                     std::to_string(boundary - d),
                 hyp);
    return rep;
}

} // namespace wdelta
