#ifndef WDELTA_POLYTOPE_HPP
#define WDELTA_POLYTOPE_HPP

#include <string>
#include <vector>

#include "wdelta/fracpoly.hpp"
#include "wdelta/linalg.hpp"

namespace wdelta {

using Coord = long long;
using Point = std::vector<Coord>;

// Inequality <normal, x> <= offset with primitive integer normal.
struct Facet {
    Point normal;
    Coord offset = 0;

    friend bool operator==(const Facet& a, const Facet& b) {
        return a.normal == b.normal && a.offset == b.offset;
    }
    friend bool operator<(const Facet& a, const Facet& b) {
        return a.normal != b.normal ? a.normal < b.normal : a.offset < b.offset;
    }
};

struct EhrhartData {
    std::vector<i64> values;      // f(0..M)
    VecQ polynomial;              // c_0..c_d
    std::vector<i64> delta;       // delta_0..delta_d
};

struct Face {
    std::vector<int> vertex_indices;  // sorted
    int dim = -1;
};

// Full-dimensional lattice polytope in V-representation with facets
// computed by exhaustive hull search (d <= 4).
class LatticePolytope {
public:
    // Accepts any full-dimensional point set; non-extreme points are dropped.
    static LatticePolytope from_points(int dim, const std::vector<Point>& points);

    int dim() const { return dim_; }
    const std::vector<Point>& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }

    bool contains(const Point& p, i64 dilate = 1) const;
    bool contains_strictly(const Point& p, i64 dilate = 1) const;

    std::vector<Point> lattice_points(i64 m) const;
    std::vector<Point> interior_lattice_points(i64 m) const;
    i64 count_lattice_points(i64 m) const;
    i64 count_interior_lattice_points(i64 m) const;

    // Counts to horizon M >= 2d+2, interpolated polynomial, delta vector.
    EhrhartData ehrhart(i64 M) const;
    FracPoly delta_poly(i64 M) const;

    // All proper nonempty faces (including facets and vertices), sorted by
    // (dim, vertex set).
    const std::vector<Face>& face_lattice() const;

    // d! * vol(P) via a pulling triangulation.
    i64 normalized_volume() const;

    // Pulling triangulation of the vertex set, pulling first at
    // vertices()[first_vertex]; simplices are sorted vertex-index lists.
    std::vector<std::vector<int>> pull_triangulation(int first_vertex = 0) const;

    // Pulling triangulation of one face of this polytope under an explicit
    // vertex priority (smaller pulls first).
    std::vector<std::vector<int>> pull_triangulation_of_face(
        const std::vector<int>& face_vertices, int face_dim,
        const std::vector<int>& priority) const;

    LatticePolytope translated(const Point& shift) const;

private:
    LatticePolytope() = default;

    int dim_ = 0;
    std::vector<Point> vertices_;
    std::vector<Facet> facets_;
    Point box_lo_, box_hi_;
    mutable std::vector<Face> faces_;  // computed on demand
};

// Facet system of conv(points); deterministic lexicographic order.
std::vector<Facet> facet_representation(int dim, const std::vector<Point>& points);

i64 dot(const Point& a, const Point& b);
Point sub(const Point& a, const Point& b);
i64 content(const Point& v);  // gcd of entries

// For d-1 generators in Z^d: the cofactor vector orthogonal to all of them
// (zero when the generators are dependent).
Point cofactor_normal(const std::vector<Point>& gens, int dim);

// Exact interpolation: the unique polynomial of degree <= deg through
// (0, values[0]), ..., (deg, values[deg]); coefficients c_0..c_deg.
VecQ interpolate_polynomial(const std::vector<i64>& values, int deg);
Rational eval_polynomial(const VecQ& coeffs, const Rational& x);

} // namespace wdelta

#endif
