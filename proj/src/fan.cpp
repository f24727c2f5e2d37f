#include "wdelta/fan.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "wdelta/error.hpp"

namespace wdelta {

namespace {

Point scale_point(const Point& p, i64 s) {
    Point r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[i] * s;
    return r;
}

bool is_subset(const Cone& a, const Cone& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

RawFan fan_over_boundary(const LatticePolytope& P, const Point& base_point) {
    if (static_cast<int>(base_point.size()) != P.dim())
        throw error("InvalidArgument", "base point dimension mismatch");
    if (!P.contains(base_point))
        throw error("BasePointOutside", "base point is not a lattice point of the polytope");

    RawFan raw;
    raw.rank = P.dim();
    Point neg(base_point.size());
    for (size_t i = 0; i < neg.size(); ++i) neg[i] = -base_point[i];
    raw.polytope = P.translated(neg);
    const auto& verts = raw.polytope.vertices();
    Point origin(raw.rank, 0);

    // Rays are the cones over the vertices other than the origin, sorted by
    // primitive generator for reproducibility.
    std::vector<std::pair<Point, int>> prim;  // (primitive v, vertex index)
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
        if (verts[i] == origin) continue;
        i64 g = content(verts[i]);
        Point v(verts[i]);
        for (auto& x : v) x /= g;
        prim.push_back({v, i});
    }
    std::sort(prim.begin(), prim.end());
    raw.vertex_ray.assign(verts.size(), -1);
    for (int r = 0; r < static_cast<int>(prim.size()); ++r) {
        int vi = prim[r].second;
        i64 g = content(verts[vi]);
        raw.rays.push_back(Ray{prim[r].first, g, verts[vi]});
        raw.vertex_ray[vi] = r;
    }

    // Maximal cones: cones over the facets of P not containing the origin.
    for (const auto& f : raw.polytope.facets()) {
        if (f.offset == 0) continue;  // facet through the origin
        std::vector<int> face;
        Cone cone;
        for (int i = 0; i < static_cast<int>(verts.size()); ++i)
            if (dot(f.normal, verts[i]) == f.offset) {
                face.push_back(i);
                cone.push_back(raw.vertex_ray[i]);
            }
        std::sort(cone.begin(), cone.end());
        raw.max_cones.push_back(cone);
        raw.max_cone_faces.push_back(face);
    }
    if (raw.max_cones.empty())
        throw error("InvalidFan", "no facet avoids the base point");
    return raw;
}

StackyFan StackyFan::from_data(int rank, std::vector<Ray> rays, std::vector<Cone> max_cones) {
    if (rank < 1) throw error("InvalidArgument", "rank must be positive");
    if (rays.empty()) throw error("InvalidFan", "no rays");
    std::set<Point> seen;
    for (auto& r : rays) {
        if (static_cast<int>(r.v.size()) != rank)
            throw error("InvalidFan", "ray dimension mismatch");
        if (content(r.v) != 1) throw error("InvalidFan", "ray generator is not primitive");
        if (r.a < 1) throw error("InvalidFan", "ray multiplier must be positive");
        if (!seen.insert(r.v).second) throw error("InvalidFan", "duplicate ray");
        r.b = scale_point(r.v, r.a);
    }
    std::set<Cone> mc_set;
    std::vector<bool> used(rays.size(), false);
    for (auto& c : max_cones) {
        std::sort(c.begin(), c.end());
        if (std::unique(c.begin(), c.end()) != c.end())
            throw error("InvalidFan", "repeated ray index in cone");
        if (static_cast<int>(c.size()) != rank)
            throw error("InvalidFan", "maximal cone is not full-dimensional");
        for (int i : c) {
            if (i < 0 || i >= static_cast<int>(rays.size()))
                throw error("InvalidFan", "ray index out of range");
            used[i] = true;
        }
        mc_set.insert(c);
    }
    if (mc_set.empty()) throw error("InvalidFan", "no maximal cones");
    for (size_t i = 0; i < used.size(); ++i)
        if (!used[i]) throw error("InvalidFan", "ray " + std::to_string(i) + " unused");

    StackyFan F;
    F.rank_ = rank;
    F.rays_ = std::move(rays);
    F.max_cones_.assign(mc_set.begin(), mc_set.end());
    F.finalize();
    return F;
}

StackyFan StackyFan::simplicialize(const RawFan& raw) {
    std::vector<int> priority(raw.polytope.vertices().size(), 0);
    for (size_t i = 0; i < priority.size(); ++i) {
        int r = raw.vertex_ray[i];
        priority[i] = r < 0 ? static_cast<int>(raw.rays.size()) : r;
    }
    std::set<Cone> mc_set;
    for (size_t k = 0; k < raw.max_cones.size(); ++k) {
        const auto& face = raw.max_cone_faces[k];
        auto simplices =
            raw.polytope.pull_triangulation_of_face(face, raw.rank - 1, priority);
        for (const auto& s : simplices) {
            Cone c;
            for (int vi : s) c.push_back(raw.vertex_ray[vi]);
            std::sort(c.begin(), c.end());
            mc_set.insert(c);
        }
    }
    StackyFan F;
    F.rank_ = raw.rank;
    F.rays_ = raw.rays;
    F.max_cones_.assign(mc_set.begin(), mc_set.end());
    F.finalize();
    return F;
}

void StackyFan::finalize() {
    // Face closure: every subset of a simplicial cone is a face.
    std::set<Cone> all;
    for (const auto& mc : max_cones_) {
        int n = static_cast<int>(mc.size());
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            Cone sub;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) sub.push_back(mc[i]);
            all.insert(sub);
        }
    }
    cones_.assign(all.begin(), all.end());
    std::sort(cones_.begin(), cones_.end(), [](const Cone& a, const Cone& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    cone_set_ = std::move(all);

    mc_adj_.resize(max_cones_.size());
    mc_det_.resize(max_cones_.size());
    for (size_t m = 0; m < max_cones_.size(); ++m) {
        IMat B(rank_, IVec(rank_));
        for (int j = 0; j < rank_; ++j)
            for (int i = 0; i < rank_; ++i) B[i][j] = rays_[max_cones_[m][j]].b[i];
        mc_det_[m] = idet(B);
        if (mc_det_[m] == 0) throw error("InvalidFan", "maximal cone generators are dependent");
        mc_adj_[m] = iadjugate(B);
    }
    for (int m = static_cast<int>(max_cones_.size()) - 1; m >= 0; --m) {
        int n = static_cast<int>(max_cones_[m].size());
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            Cone sub;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) sub.push_back(max_cones_[m][i]);
            owner_[sub] = m;
        }
    }

    // Support convexity: every boundary hyperplane must have all rays on
    // the owning side.
    support_convex_ = true;
    if (rank_ >= 2) {
        std::map<Cone, std::vector<int>> facet_owners;
        for (int m = 0; m < static_cast<int>(max_cones_.size()); ++m)
            for (int drop = 0; drop < rank_; ++drop) {
                Cone f = max_cones_[m];
                f.erase(f.begin() + drop);
                facet_owners[f].push_back(m);
            }
        for (const auto& [f, owners] : facet_owners) {
            if (owners.size() > 2)
                throw error("InvalidFan", "a wall belongs to more than two maximal cones");
            if (owners.size() != 1) continue;
            std::vector<Point> gens;
            for (int i : f) gens.push_back(rays_[i].v);
            Point n = cofactor_normal(gens, rank_);
            int extra = -1;
            for (int i : max_cones_[owners[0]])
                if (!std::binary_search(f.begin(), f.end(), i)) extra = i;
            i64 side = dot(n, rays_[extra].v);
            if (side < 0)
                for (auto& x : n) x = -x;
            for (const auto& r : rays_)
                if (dot(n, r.v) < 0) { support_convex_ = false; break; }
            if (!support_convex_) break;
        }
    }
    if (!support_convex_)
        throw error("NonConvexSupport", "fan support is not convex");
}

bool StackyFan::is_complete() const {
    if (complete_.has_value()) return *complete_;
    std::map<Cone, std::vector<int>> facet_owners;
    for (int m = 0; m < static_cast<int>(max_cones_.size()); ++m) {
        if (rank_ == 1) {
            facet_owners[Cone{}].push_back(m);
            continue;
        }
        for (int drop = 0; drop < rank_; ++drop) {
            Cone f = max_cones_[m];
            f.erase(f.begin() + drop);
            facet_owners[f].push_back(m);
        }
    }
    bool closed = true;
    for (const auto& [f, owners] : facet_owners)
        if (owners.size() != 2) { closed = false; break; }

    // connectivity of the dual graph through walls
    std::vector<int> parent(max_cones_.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [f, owners] : facet_owners)
        if (owners.size() == 2) parent[find(owners[0])] = find(owners[1]);
    bool connected = true;
    for (size_t m = 1; m < max_cones_.size(); ++m)
        if (find(static_cast<int>(m)) != find(0)) { connected = false; break; }

    bool result = closed && connected && !max_cones_.empty();
    if (result) {
        // Cross-check: a complete fan must locate every sampled direction.
        std::mt19937_64 rng(0x5eedu);
        std::uniform_int_distribution<i64> coord(-9, 9);
        for (int trial = 0; trial < 20; ++trial) {
            Point p(rank_);
            bool zero = true;
            for (auto& x : p) {
                x = coord(rng);
                zero &= x == 0;
            }
            if (zero) continue;
            if (!try_locate(p))
                throw error("InvalidFan", "combinatorially complete fan misses a direction");
        }
    }
    complete_ = result;
    return result;
}

std::optional<Located> StackyFan::try_locate(const Point& v) const {
    if (static_cast<int>(v.size()) != rank_)
        throw error("InvalidArgument", "point dimension mismatch");
    for (size_t m = 0; m < max_cones_.size(); ++m) {
        IVec nums = imatvec(mc_adj_[m], v);
        i64 s = mc_det_[m] > 0 ? 1 : -1;
        bool inside = true;
        for (i64 x : nums)
            if (x * s < 0) { inside = false; break; }
        if (!inside) continue;
        Located loc;
        i64 absdet = mc_det_[m] * s;
        for (int i = 0; i < rank_; ++i) {
            if (nums[i] == 0) continue;
            loc.carrier.push_back(max_cones_[m][i]);
            loc.coords.push_back(Rational(nums[i] * s, absdet));
        }
        return loc;
    }
    return std::nullopt;
}

Located StackyFan::locate(const Point& v) const {
    auto loc = try_locate(v);
    if (!loc) throw error("OutsideSupport", "point is outside the fan support");
    return *loc;
}

Rational StackyFan::psi(const Point& v) const {
    auto loc = locate(v);
    Rational s(0);
    for (const auto& c : loc.coords) s += c;
    return s;
}

FracPoly StackyFan::h_vector(const Cone& tau) const {
    if (!has_cone(tau)) throw error("ConeNotInFan", "h_vector of a cone not in the fan");
    FracPoly h;
    for (const auto& sigma : cones_) {
        if (!is_subset(tau, sigma)) continue;
        int sdim = static_cast<int>(sigma.size());
        int tdim = static_cast<int>(tau.size());
        FracPoly t_pow = FracPoly::term(Rational(1), Rational(sdim - tdim));
        h += t_pow * one_minus_t_pow(static_cast<unsigned>(rank_ - sdim));
    }
    return h;
}

StackyFan::BoxSolver StackyFan::box_solver(const Cone& tau) const {
    int k = static_cast<int>(tau.size());
    IMat B(rank_, IVec(k));
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < rank_; ++i) B[i][j] = rays_[tau[j]].b[i];

    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        IMat sq(k, IVec(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sq[i][j] = B[pick[i]][j];
        i64 det = idet(sq);
        if (det != 0) return BoxSolver{pick, iadjugate(sq), det};
        int pos = k - 1;
        while (pos >= 0 && pick[pos] == rank_ - k + pos) --pos;
        if (pos < 0) break;
        ++pick[pos];
        for (int i = pos + 1; i < k; ++i) pick[i] = pick[i - 1] + 1;
    }
    throw error("InvalidFan", "cone generators are dependent");
}

const std::vector<BoxElement>& StackyFan::box(const Cone& tau) const {
    std::lock_guard<std::mutex> lock(box_mu_);
    auto it = box_cache_.find(tau);
    if (it != box_cache_.end()) return it->second;
    if (!has_cone(tau)) throw error("ConeNotInFan", "box of a cone not in the fan");

    std::vector<BoxElement> out;
    if (tau.empty()) {
        out.push_back(BoxElement{Point(rank_, 0), Cone{}, VecQ{}, Rational(0)});
        return box_cache_.emplace(tau, std::move(out)).first->second;
    }

    int k = static_cast<int>(tau.size());
    auto solver = box_solver(tau);
    IMat B(rank_, IVec(k));
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < rank_; ++i) B[i][j] = rays_[tau[j]].b[i];

    Point lo(rank_, 0), hi(rank_, 0);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < k; ++j) {
            lo[i] += std::min<i64>(0, B[i][j]);
            hi[i] += std::max<i64>(0, B[i][j]);
        }

    i64 s = solver.det > 0 ? 1 : -1;
    i64 absdet = solver.det * s;
    Point v = lo;
    while (true) {
        IVec sel(k);
        for (int i = 0; i < k; ++i) sel[i] = v[solver.row_pick[i]];
        IVec qn = imatvec(solver.adj, sel);
        bool open = true;
        for (i64 x : qn)
            if (x * s <= 0 || x * s >= absdet) { open = false; break; }
        if (open) {
            bool consistent = true;
            for (int i = 0; i < rank_ && consistent; ++i) {
                i64 acc = 0;
                for (int j = 0; j < k; ++j) acc += B[i][j] * qn[j];
                consistent = acc == solver.det * v[i];
            }
            if (consistent) {
                VecQ q;
                Rational psi(0);
                for (int j = 0; j < k; ++j) {
                    q.push_back(Rational(qn[j], solver.det));
                    psi += q.back();
                }
                out.push_back(BoxElement{v, tau, q, psi});
            }
        }
        int j = rank_ - 1;
        while (j >= 0 && v[j] == hi[j]) {
            v[j] = lo[j];
            --j;
        }
        if (j < 0) break;
        ++v[j];
    }
    std::sort(out.begin(), out.end(),
              [](const BoxElement& a, const BoxElement& b) { return a.v < b.v; });
    return box_cache_.emplace(tau, std::move(out)).first->second;
}

BoxElement StackyFan::involution(const BoxElement& e) const {
    if (e.tau.empty()) throw error("ZeroConeBox", "involution undefined on BOX of the zero cone");
    BoxElement r;
    r.tau = e.tau;
    r.v = Point(rank_, 0);
    for (size_t j = 0; j < e.tau.size(); ++j) {
        const Point& b = rays_[e.tau[j]].b;
        for (int i = 0; i < rank_; ++i) r.v[i] += b[i];
        r.q.push_back(Rational(1) - e.q[j]);
    }
    for (int i = 0; i < rank_; ++i) r.v[i] -= e.v[i];
    r.psi = Rational(static_cast<long long>(e.tau.size())) - e.psi;
    return r;
}

Decomposition StackyFan::decompose(const Point& v) const {
    Located loc = locate(v);
    Decomposition dec;
    dec.carrier = loc.carrier;
    dec.integral_part = Point(rank_, 0);
    dec.box_part.tau = Cone{};
    dec.box_part.v = Point(rank_, 0);
    dec.box_part.psi = Rational(0);
    Point shift_sum(rank_, 0);
    for (size_t j = 0; j < loc.carrier.size(); ++j) {
        int ray = loc.carrier[j];
        const Rational& c = loc.coords[j];
        if (c.is_integer()) {
            // c >= 1: one copy of b goes to the shift, the rest to v'.
            dec.shifted_rays.push_back(ray);
            mpz_class reps = c.num() - 1;
            if (!reps.fits_slong_p()) throw error("InvalidArgument", "coordinate too large");
            i64 n = reps.get_si();
            for (int i = 0; i < rank_; ++i) {
                dec.integral_part[i] += n * rays_[ray].b[i];
                shift_sum[i] += rays_[ray].b[i];
            }
        } else {
            dec.box_part.tau.push_back(ray);
            Rational fl = c.floor_r();
            dec.box_part.q.push_back(c - fl);
            dec.box_part.psi += c - fl;
            if (!fl.num().fits_slong_p()) throw error("InvalidArgument", "coordinate too large");
            i64 n = fl.num().get_si();
            for (int i = 0; i < rank_; ++i) dec.integral_part[i] += n * rays_[ray].b[i];
        }
    }
    for (int i = 0; i < rank_; ++i)
        dec.box_part.v[i] = v[i] - dec.integral_part[i] - shift_sum[i];
    return dec;
}

int StackyFan::owner_of(const Cone& c) const {
    auto it = owner_.find(c);
    if (it == owner_.end()) throw error("ConeNotInFan", "cone not in fan");
    return it->second;
}

void StackyFan::cone_scan_box(int mc, i64 M, Point& lo, Point& hi) const {
    lo.assign(rank_, 0);
    hi.assign(rank_, 0);
    for (int i = 0; i < rank_; ++i)
        for (int ray : max_cones_[mc]) {
            lo[i] = std::min(lo[i], rays_[ray].b[i] * M);
            hi[i] = std::max(hi[i], rays_[ray].b[i] * M);
        }
}

void StackyFan::validate_pairwise() const {
    if (rank_ == 1) return;
    int n = static_cast<int>(max_cones_.size());
    for (int p = 0; p < n; ++p) {
        IMat B1(rank_, IVec(rank_));
        for (int j = 0; j < rank_; ++j)
            for (int i = 0; i < rank_; ++i) B1[i][j] = rays_[max_cones_[p][j]].b[i];
        for (int q = p + 1; q < n; ++q) {
            Cone common;
            std::set_intersection(max_cones_[p].begin(), max_cones_[p].end(),
                                  max_cones_[q].begin(), max_cones_[q].end(),
                                  std::back_inserter(common));
            // Rows of the u-space inequality system: u >= 0 and C u >= 0.
            i64 s2 = mc_det_[q] > 0 ? 1 : -1;
            IMat rowsys;
            for (int i = 0; i < rank_; ++i) {
                IVec row(rank_, 0);
                row[i] = 1;
                rowsys.push_back(row);
            }
            for (int i = 0; i < rank_; ++i) {
                IVec row(rank_, 0);
                for (int j = 0; j < rank_; ++j) {
                    i64 acc = 0;
                    for (int t = 0; t < rank_; ++t) acc += mc_adj_[q][i][t] * B1[t][j];
                    row[j] = acc * s2;
                }
                rowsys.push_back(row);
            }
            int total = static_cast<int>(rowsys.size());
            std::vector<int> pick(rank_ - 1);
            std::iota(pick.begin(), pick.end(), 0);
            while (true) {
                std::vector<Point> gens;
                for (int idx : pick) {
                    Point g(rowsys[idx].begin(), rowsys[idx].end());
                    gens.push_back(g);
                }
                Point z = cofactor_normal(gens, rank_);
                if (content(z) != 0) {
                    for (int dir = 0; dir < 2; ++dir) {
                        Point zz = z;
                        if (dir) for (auto& x : zz) x = -x;
                        bool feas = true;
                        for (const auto& row : rowsys) {
                            i64 acc = 0;
                            for (int j = 0; j < rank_; ++j) acc += row[j] * zz[j];
                            if (acc < 0) { feas = false; break; }
                        }
                        if (!feas) continue;
                        Point x(rank_, 0);
                        for (int i = 0; i < rank_; ++i)
                            for (int j = 0; j < rank_; ++j) x[i] += B1[i][j] * zz[j];
                        if (content(x) == 0) continue;
                        i64 g = content(x);
                        for (auto& c : x) c /= g;
                        bool ok = false;
                        for (int ray : common)
                            if (rays_[ray].v == x) { ok = true; break; }
                        if (!ok)
                            throw error("InvalidFan",
                                        "maximal cones intersect off a common face");
                    }
                }
                int pos = static_cast<int>(pick.size()) - 1;
                while (pos >= 0 && pick[pos] == total - (rank_ - 1) + pos) --pos;
                if (pos < 0) break;
                ++pick[pos];
                for (size_t i = pos + 1; i < pick.size(); ++i) pick[i] = pick[i - 1] + 1;
            }
        }
    }
}

} // namespace wdelta
