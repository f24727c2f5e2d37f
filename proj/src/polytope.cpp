#include "wdelta/polytope.hpp"

#include <algorithm>
#include <set>

#include "wdelta/error.hpp"

namespace wdelta {

i64 dot(const Point& a, const Point& b) {
    i64 s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Point sub(const Point& a, const Point& b) {
    Point r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

i64 content(const Point& v) {
    i64 g = 0;
    for (i64 x : v) g = igcd(g, x);
    return g;
}

namespace {

int affine_rank(const std::vector<Point>& pts) {
    if (pts.empty()) return 0;
    int d = static_cast<int>(pts[0].size());
    MatQ m(static_cast<int>(pts.size()) - 1, d);
    for (size_t i = 1; i < pts.size(); ++i)
        for (int j = 0; j < d; ++j)
            m.at(static_cast<int>(i) - 1, j) = Rational(pts[i][j] - pts[0][j]);
    return rank(m) + 1;  // affine rank = linear rank of differences + 1
}

// Normal of the hyperplane through d affinely independent points: the
// vector of signed (d-1)-minors of the difference matrix.
Point hyperplane_normal(const std::vector<Point>& pts, int d) {
    std::vector<Point> diffs;
    for (int i = 1; i < d; ++i) diffs.push_back(sub(pts[i], pts[0]));
    return cofactor_normal(diffs, d);
}

} // namespace

Point cofactor_normal(const std::vector<Point>& gens, int dim) {
    IMat m(dim - 1, IVec(dim));
    for (int i = 0; i < dim - 1; ++i)
        for (int j = 0; j < dim; ++j) m[i][j] = gens[i][j];
    Point n(dim, 0);
    for (int j = 0; j < dim; ++j) {
        IMat minor(dim - 1, IVec(dim - 1));
        for (int r = 0; r < dim - 1; ++r) {
            int cc = 0;
            for (int c = 0; c < dim; ++c) {
                if (c == j) continue;
                minor[r][cc++] = m[r][c];
            }
        }
        i64 det = idet(minor);
        n[j] = (j % 2 == 0) ? det : -det;
    }
    return n;
}

std::vector<Facet> facet_representation(int dim, const std::vector<Point>& points) {
    if (dim > 4) throw error("UnsupportedDimension", "hull computation limited to d <= 4");
    if (points.empty()) throw error("NotFullDimensional", "no points");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != dim)
            throw error("InvalidArgument", "point dimension mismatch");
    if (affine_rank(points) != dim + 1)
        throw error("NotFullDimensional", "points do not affinely span");

    std::set<Facet> found;
    int n = static_cast<int>(points.size());

    if (dim == 1) {
        i64 lo = points[0][0], hi = points[0][0];
        for (const auto& p : points) { lo = std::min(lo, p[0]); hi = std::max(hi, p[0]); }
        found.insert(Facet{{1}, hi});
        found.insert(Facet{{-1}, -lo});
    } else {
        std::vector<int> idx(dim);
        for (int i = 0; i < dim; ++i) idx[i] = i;
        while (true) {
            std::vector<Point> sel;
            for (int i : idx) sel.push_back(points[i]);
            Point nrm = hyperplane_normal(sel, dim);
            if (content(nrm) != 0) {
                i64 a = dot(nrm, sel[0]);
                bool pos = false, neg = false;
                for (const auto& p : points) {
                    i64 v = dot(nrm, p) - a;
                    pos |= v > 0;
                    neg |= v < 0;
                    if (pos && neg) break;
                }
                if (!(pos && neg)) {
                    if (pos) {
                        for (auto& x : nrm) x = -x;
                        a = -a;
                    }
                    i64 g = content(nrm);
                    for (auto& x : nrm) x /= g;
                    // offset recomputed against the primitive normal
                    a = dot(nrm, sel[0]);
                    found.insert(Facet{nrm, a});
                }
            }
            int pos2 = dim - 1;
            while (pos2 >= 0 && idx[pos2] == n - dim + pos2) --pos2;
            if (pos2 < 0) break;
            ++idx[pos2];
            for (int i = pos2 + 1; i < dim; ++i) idx[i] = idx[i - 1] + 1;
        }
    }

    std::vector<Facet> facets(found.begin(), found.end());
    for (const auto& f : facets) {
        std::vector<Point> on;
        for (const auto& p : points)
            if (dot(f.normal, p) == f.offset) on.push_back(p);
        if (affine_rank(on) != dim)
            throw error("NotFullDimensional", "degenerate facet candidate survived");
    }
    return facets;
}

LatticePolytope LatticePolytope::from_points(int dim, const std::vector<Point>& points) {
    LatticePolytope P;
    P.dim_ = dim;
    P.facets_ = facet_representation(dim, points);

    // A point is a vertex iff the normals of its tight facets span R^d.
    std::vector<Point> dedup;
    std::set<Point> seen;
    for (const auto& p : points)
        if (seen.insert(p).second) dedup.push_back(p);
    for (const auto& p : dedup) {
        std::vector<VecQ> tight;
        for (const auto& f : P.facets_)
            if (dot(f.normal, p) == f.offset) {
                VecQ col(dim);
                for (int j = 0; j < dim; ++j) col[j] = Rational(f.normal[j]);
                tight.push_back(col);
            }
        if (static_cast<int>(tight.size()) >= dim &&
            rank(MatQ::from_columns(tight)) == dim)
            P.vertices_.push_back(p);
    }
    std::sort(P.vertices_.begin(), P.vertices_.end());
    if (affine_rank(P.vertices_) != dim + 1)
        throw error("NotFullDimensional", "vertex set does not span");

    P.box_lo_.assign(dim, 0);
    P.box_hi_.assign(dim, 0);
    for (int j = 0; j < dim; ++j) {
        i64 lo = P.vertices_[0][j], hi = lo;
        for (const auto& v : P.vertices_) {
            lo = std::min(lo, v[j]);
            hi = std::max(hi, v[j]);
        }
        P.box_lo_[j] = lo;
        P.box_hi_[j] = hi;
    }
    return P;
}

bool LatticePolytope::contains(const Point& p, i64 dilate) const {
    for (const auto& f : facets_)
        if (dot(f.normal, p) > dilate * f.offset) return false;
    return true;
}

bool LatticePolytope::contains_strictly(const Point& p, i64 dilate) const {
    for (const auto& f : facets_)
        if (dot(f.normal, p) >= dilate * f.offset) return false;
    return true;
}

namespace {

template <typename Pred>
void scan_box(const Point& lo, const Point& hi, const Pred& visit) {
    int d = static_cast<int>(lo.size());
    Point cur = lo;
    while (true) {
        visit(cur);
        int j = d - 1;
        while (j >= 0 && cur[j] == hi[j]) {
            cur[j] = lo[j];
            --j;
        }
        if (j < 0) break;
        ++cur[j];
    }
}

} // namespace

std::vector<Point> LatticePolytope::lattice_points(i64 m) const {
    std::vector<Point> out;
    if (m < 0) return out;
    if (m == 0) {
        Point origin(dim_, 0);
        if (contains(origin, 0)) out.push_back(origin);
        return out;
    }
    Point lo(dim_), hi(dim_);
    for (int j = 0; j < dim_; ++j) {
        lo[j] = box_lo_[j] * m;
        hi[j] = box_hi_[j] * m;
        if (lo[j] > hi[j]) std::swap(lo[j], hi[j]);
    }
    scan_box(lo, hi, [&](const Point& p) {
        if (contains(p, m)) out.push_back(p);
    });
    return out;  // lexicographic by scan order
}

std::vector<Point> LatticePolytope::interior_lattice_points(i64 m) const {
    std::vector<Point> out;
    if (m <= 0) return out;
    Point lo(dim_), hi(dim_);
    for (int j = 0; j < dim_; ++j) {
        lo[j] = box_lo_[j] * m;
        hi[j] = box_hi_[j] * m;
        if (lo[j] > hi[j]) std::swap(lo[j], hi[j]);
    }
    scan_box(lo, hi, [&](const Point& p) {
        if (contains_strictly(p, m)) out.push_back(p);
    });
    return out;
}

i64 LatticePolytope::count_lattice_points(i64 m) const {
    return static_cast<i64>(lattice_points(m).size());
}

i64 LatticePolytope::count_interior_lattice_points(i64 m) const {
    return static_cast<i64>(interior_lattice_points(m).size());
}

VecQ interpolate_polynomial(const std::vector<i64>& values, int deg) {
    // Lagrange basis on nodes 0..deg, accumulated into monomial coefficients.
    VecQ coeffs(deg + 1, Rational(0));
    for (int i = 0; i <= deg; ++i) {
        // numerator polynomial prod_{j != i} (x - j)
        VecQ basis{Rational(1)};
        Rational denom(1);
        for (int j = 0; j <= deg; ++j) {
            if (j == i) continue;
            VecQ next(basis.size() + 1, Rational(0));
            for (size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * Rational(static_cast<long long>(j));
            }
            basis = next;
            denom *= Rational(static_cast<long long>(i - j));
        }
        Rational w = Rational(values[i]) / denom;
        for (size_t k = 0; k < basis.size(); ++k) coeffs[k] += basis[k] * w;
    }
    return coeffs;
}

Rational eval_polynomial(const VecQ& coeffs, const Rational& x) {
    Rational acc(0);
    for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

EhrhartData LatticePolytope::ehrhart(i64 M) const {
    if (M < 2 * dim_ + 2)
        throw error("InvalidArgument", "ehrhart horizon must be at least 2d+2");
    EhrhartData out;
    for (i64 m = 0; m <= M; ++m) out.values.push_back(count_lattice_points(m));

    std::vector<i64> head(out.values.begin(), out.values.begin() + dim_ + 1);
    out.polynomial = interpolate_polynomial(head, dim_);
    for (i64 m = dim_ + 1; m <= M; ++m)
        if (eval_polynomial(out.polynomial, Rational(m)) != Rational(out.values[m]))
            throw error("InterpolationMismatch",
                        "count at m=" + std::to_string(m) + " is not polynomial");

    // delta_i = sum_j (-1)^j C(d+1, j) f(i-j)
    std::vector<i64> binom(dim_ + 2, 1);
    for (int j = 1; j <= dim_ + 1; ++j)
        binom[j] = binom[j - 1] * (dim_ + 2 - j) / j;
    for (i64 i = 0; i <= M; ++i) {
        i64 acc = 0;
        for (int j = 0; j <= dim_ + 1 && j <= i; ++j)
            acc += (j % 2 ? -1 : 1) * binom[j] * out.values[i - j];
        if (i <= dim_) {
            if (acc < 0) throw error("InterpolationMismatch", "negative delta coefficient");
            out.delta.push_back(acc);
        } else if (acc != 0) {
            throw error("InterpolationMismatch", "delta differences do not vanish past degree d");
        }
    }
    return out;
}

FracPoly LatticePolytope::delta_poly(i64 M) const {
    auto data = ehrhart(M);
    FracPoly p;
    for (size_t i = 0; i < data.delta.size(); ++i)
        p.add_term(Rational(data.delta[i]), Rational(static_cast<long long>(i)));
    return p;
}

const std::vector<Face>& LatticePolytope::face_lattice() const {
    if (!faces_.empty()) return faces_;
    // Start from facet vertex sets, close under pairwise intersection.
    std::set<std::vector<int>> sets;
    for (const auto& f : facets_) {
        std::vector<int> s;
        for (int i = 0; i < static_cast<int>(vertices_.size()); ++i)
            if (dot(f.normal, vertices_[i]) == f.offset) s.push_back(i);
        sets.insert(s);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> cur(sets.begin(), sets.end());
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = i + 1; j < cur.size(); ++j) {
                std::vector<int> inter;
                std::set_intersection(cur[i].begin(), cur[i].end(), cur[j].begin(),
                                      cur[j].end(), std::back_inserter(inter));
                if (!inter.empty() && sets.insert(inter).second) grew = true;
            }
    }
    for (const auto& s : sets) {
        std::vector<Point> pts;
        for (int i : s) pts.push_back(vertices_[i]);
        faces_.push_back(Face{s, affine_rank(pts) - 1});
    }
    std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.vertex_indices < b.vertex_indices;
    });
    return faces_;
}

namespace {

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Pulling triangulation of a face (given by sorted vertex indices) using
// the priority order prio (smaller pulls first).
void pull_face(const std::vector<Face>& lattice, const std::vector<int>& face_verts, int face_dim,
               const std::vector<int>& prio,
               std::vector<std::vector<int>>& out_simplices) {
    if (static_cast<int>(face_verts.size()) == face_dim + 1) {
        out_simplices.push_back(face_verts);
        return;
    }
    int w = face_verts[0];
    for (int v : face_verts)
        if (prio[v] < prio[w]) w = v;
    for (const auto& g : lattice) {
        if (g.dim != face_dim - 1 || !subset_of(g.vertex_indices, face_verts)) continue;
        if (std::binary_search(g.vertex_indices.begin(), g.vertex_indices.end(), w)) continue;
        std::vector<std::vector<int>> sub;
        pull_face(lattice, g.vertex_indices, g.dim, prio, sub);
        for (auto& s : sub) {
            s.push_back(w);
            std::sort(s.begin(), s.end());
            out_simplices.push_back(s);
        }
    }
}

} // namespace

std::vector<std::vector<int>> LatticePolytope::pull_triangulation_of_face(
    const std::vector<int>& face_vertices, int face_dim,
    const std::vector<int>& priority) const {
    std::vector<std::vector<int>> simplices;
    pull_face(face_lattice(), face_vertices, face_dim, priority, simplices);
    std::sort(simplices.begin(), simplices.end());
    return simplices;
}

std::vector<std::vector<int>> LatticePolytope::pull_triangulation(int first_vertex) const {
    const auto& lattice = face_lattice();
    std::vector<int> prio(vertices_.size());
    for (size_t i = 0; i < vertices_.size(); ++i) prio[i] = static_cast<int>(i) + 1;
    prio[first_vertex] = 0;
    std::vector<int> all(vertices_.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);

    // Treat P itself as the top face; its facets come from the lattice.
    std::vector<std::vector<int>> simplices;
    if (static_cast<int>(vertices_.size()) == dim_ + 1) {
        simplices.push_back(all);
        return simplices;
    }
    int w = first_vertex;
    for (const auto& g : lattice) {
        if (g.dim != dim_ - 1) continue;
        if (std::binary_search(g.vertex_indices.begin(), g.vertex_indices.end(), w)) continue;
        std::vector<std::vector<int>> sub;
        pull_face(lattice, g.vertex_indices, g.dim, prio, sub);
        for (auto& s : sub) {
            s.push_back(w);
            std::sort(s.begin(), s.end());
            simplices.push_back(s);
        }
    }
    std::sort(simplices.begin(), simplices.end());
    return simplices;
}

i64 LatticePolytope::normalized_volume() const {
    i64 total = 0;
    for (const auto& s : pull_triangulation(0)) {
        IMat edges(dim_, IVec(dim_));
        for (int i = 1; i <= dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                edges[i - 1][j] = vertices_[s[i]][j] - vertices_[s[0]][j];
        total += std::llabs(idet(edges));
    }
    return total;
}

LatticePolytope LatticePolytope::translated(const Point& shift) const {
    std::vector<Point> pts;
    for (auto v : vertices_) {
        for (int j = 0; j < dim_; ++j) v[j] += shift[j];
        pts.push_back(v);
    }
    return from_points(dim_, pts);
}

} // namespace wdelta
