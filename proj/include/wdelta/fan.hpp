#ifndef WDELTA_FAN_HPP
#define WDELTA_FAN_HPP

#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

#include "wdelta/fracpoly.hpp"
#include "wdelta/linalg.hpp"
#include "wdelta/polytope.hpp"

namespace wdelta {

// A simplicial cone is its sorted set of ray indices; {} is the zero cone.
using Cone = std::vector<int>;

struct Ray {
    Point v;   // primitive generator
    i64 a = 1; // multiplier
    Point b;   // a * v, the stacky lattice point with psi(b) = 1
};

// Lattice point of the open parallelepiped of a cone, with its exact
// fractional coordinates q_i (0 < q_i < 1) and psi = sum q_i.
struct BoxElement {
    Point v;
    Cone tau;
    VecQ q;  // aligned with tau
    Rational psi;
};

// v = box_part.v + integral_part + sum of b_i over shifted_rays.
struct Decomposition {
    BoxElement box_part;
    Point integral_part;
    Cone shifted_rays;
    Cone carrier;  // sigma(v)
};

struct Located {
    Cone carrier;  // minimal cone containing v in its relative interior
    VecQ coords;   // strictly positive, aligned with carrier
};

// Fan over the faces of a polytope that miss the base point; cones may be
// non-simplicial. Carries what the pulling refinement needs.
struct RawFan {
    int rank = 0;
    std::vector<Ray> rays;
    std::vector<Cone> max_cones;                 // ray-index sets
    LatticePolytope polytope;                    // translated, base point at 0
    std::vector<std::vector<int>> max_cone_faces;  // facet vertex sets, aligned
    std::vector<int> vertex_ray;                 // polytope vertex index -> ray index (-1 for 0)
};

RawFan fan_over_boundary(const LatticePolytope& P, const Point& base_point);

class StackyFan {
public:
    // Direct stacky-fan data: rays in file order, maximal cones by index.
    static StackyFan from_data(int rank, std::vector<Ray> rays, std::vector<Cone> max_cones);

    // Pulling refinement: same rays, each non-simplicial cone is coned from
    // its lowest-indexed ray onto its triangulated proper faces.
    static StackyFan simplicialize(const RawFan& raw);

    int rank() const { return rank_; }
    int num_rays() const { return static_cast<int>(rays_.size()); }
    const std::vector<Ray>& rays() const { return rays_; }
    const std::vector<Cone>& max_cones() const { return max_cones_; }
    const std::vector<Cone>& cones() const { return cones_; }  // closed under faces
    bool has_cone(const Cone& c) const { return cone_set_.count(c) > 0; }
    int codim(const Cone& c) const { return rank_ - static_cast<int>(c.size()); }

    bool is_complete() const;
    bool support_convex() const { return support_convex_; }

    Located locate(const Point& v) const;               // throws OutsideSupport
    std::optional<Located> try_locate(const Point& v) const;
    Rational psi(const Point& v) const;

    FracPoly h_vector(const Cone& tau) const;           // throws ConeNotInFan
    const std::vector<BoxElement>& box(const Cone& tau) const;
    BoxElement involution(const BoxElement& e) const;   // throws ZeroConeBox
    Decomposition decompose(const Point& v) const;

    // O(max_cones^2) pairwise intersection-is-a-common-face check.
    void validate_pairwise() const;

    // Hot-path accessors for enumeration loops.
    const IMat& max_cone_adj(int mc) const { return mc_adj_[mc]; }
    i64 max_cone_det(int mc) const { return mc_det_[mc]; }
    // Index of the first maximal cone containing c.
    int owner_of(const Cone& c) const;
    // Bounding box of M * Q restricted to a maximal cone's simplex.
    void cone_scan_box(int mc, i64 M, Point& lo, Point& hi) const;

private:
    StackyFan() = default;
    void finalize();  // closure, caches, convexity

    int rank_ = 0;
    std::vector<Ray> rays_;
    std::vector<Cone> max_cones_;
    std::vector<Cone> cones_;
    std::set<Cone> cone_set_;
    std::vector<IMat> mc_adj_;
    std::vector<i64> mc_det_;
    std::map<Cone, int> owner_;
    bool support_convex_ = false;
    mutable std::optional<bool> complete_;

    struct BoxSolver {
        std::vector<int> row_pick;
        IMat adj;
        i64 det = 0;
    };
    BoxSolver box_solver(const Cone& tau) const;
    mutable std::map<Cone, std::vector<BoxElement>> box_cache_;
    mutable std::mutex box_mu_;
};

} // namespace wdelta

#endif
