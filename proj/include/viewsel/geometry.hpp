#ifndef VIEWSEL_GEOMETRY_HPP
#define VIEWSEL_GEOMETRY_HPP

#include <Eigen/Core>
#include <array>
#include <cmath>
#include <vector>

#include "viewsel/errors.hpp"

namespace viewsel {

using Point2 = Eigen::Vector2d;
using Point3 = Eigen::Vector3d;
using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

// Collinearity / degeneracy tolerance in normalized units (lengths divided
// by the configuration scale before comparison).
inline constexpr double kGeomTol = 1e-12;

/**
 * Uncertainty wedge of a camera on the viewing line S.
 *
 * Angle convention: S is horizontal, the scene lies below it. theta is the
 * angle between the wedge bisector and the +x direction of S, opening
 * downward; the boundary rays sit at theta -+ alpha. A camera to the left of
 * the target carries its paper angle directly (theta = theta_p); a mirrored
 * camera on the right maps to theta = pi - theta_q.
 */
struct Wedge2 {
    Point2 apex;
    double theta;  // radians, in (alpha, pi - alpha): both rays below S
    double alpha;  // radians, half-angle, in (0, pi/4)

    Wedge2(const Point2& apex, double theta, double alpha);

    // Direction of the boundary ray at downward angle phi from +x.
    static Vec2 ray_direction(double phi) { return Vec2(std::cos(phi), -std::sin(phi)); }
};

struct HalfPlane2 {
    Point2 boundary_point;
    Vec2 inward_normal;  // unit length within kGeomTol

    HalfPlane2(const Point2& boundary_point, const Vec2& inward_normal);

    bool contains(const Point2& p, double tol = 0.0) const {
        return inward_normal.dot(p - boundary_point) >= -tol;
    }
};

// Counter-clockwise convex polygon. Construction through from_ccw validates
// convexity and rejects duplicate consecutive vertices; a default-constructed
// instance is empty and only serves as a placeholder.
class ConvexPolygon2 {
public:
    ConvexPolygon2() = default;

    static ConvexPolygon2 from_ccw(std::vector<Point2> vertices);

    const std::vector<Point2>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    const Point2& operator[](std::size_t i) const { return vertices_[i]; }

    bool contains(const Point2& p, double tol) const;

private:
    std::vector<Point2> vertices_;
};

struct Cone3 {
    Point3 apex;
    Vec3 axis;     // unit length
    double alpha;  // radians, in (0, pi/4)

    Cone3(const Point3& apex, const Vec3& axis, double alpha);

    bool contains(const Point3& p, double tol = 0.0) const;
};

// (inner, outer) half-planes whose boundary lines pass through the apex at
// downward angles theta - alpha and theta + alpha; their intersection is the
// wedge.
std::pair<HalfPlane2, HalfPlane2> wedge_halfplanes(const Wedge2& w);

// Intersection of two wedges by sequential half-plane clipping of a large
// bounding box. Throws EmptyIntersection when the wedges are disjoint and
// UnboundedIntersection when the four boundary directions do not close the
// region (surviving box vertices).
ConvexPolygon2 intersect_wedges(const Wedge2& w1, const Wedge2& w2);

// Max pairwise vertex distance; the diameter of a convex polygon is attained
// at a vertex pair.
double polygon_diameter(const ConvexPolygon2& p);

struct EdgeLengths {
    double r1, r2, r3, r4;
};

// Closed-form side lengths of the wedge intersection quadrilateral for
// cameras a baseline t apart viewing at angles theta_p, theta_q, e.g.
//   r1 = t sin(theta_q - a) sin(2a) / [sin(theta_p + theta_q - 2a) sin(theta_p + theta_q)].
// Throws DegenerateConfiguration when a denominator sine drops to <= 1e-12.
EdgeLengths edge_lengths(double t, double theta_p, double theta_q, double alpha);

struct DiagLengths {
    double diag1, diag2;  // vertical (v1v3) and horizontal (v2v4) diagonals
};

// diag1^2 = r1^2 + r2^2 - 2 r1 r2 cos(theta_p + theta_q)
// diag2^2 = r1^2 + r4^2 - 2 r1 r4 cos(pi - theta_p - theta_q + 2 alpha)
DiagLengths diag_lengths(const EdgeLengths& r, double theta_p, double theta_q, double alpha);

// Length of the vertical segment cut from a line through the target foot by
// the wedge of a camera at height h whose bisector sits at angle theta:
//   x = 2 h sin(2a) / (sin(2 theta) - sin(2a)).
// Throws DegenerateConfiguration when sin(2 theta) <= sin(2 alpha).
double cone_slice_length(double theta, double alpha, double h);

// Quadrilateral vertices of a bounded wedge-pair intersection, labeled
//   v1 = shallow x shallow rays (coincides with the target in the optimal
//        configuration), v2 = left, v3 = steep x steep, v4 = right,
// in CCW order. Requires the intersection to be bounded and all four ray
// pairs to actually cross; used by the orientation sweeps where both wedges
// contain the target by construction. Throws UnboundedIntersection /
// EmptyIntersection otherwise.
std::array<Point2, 4> wedge_pair_vertices(const Wedge2& w1, const Wedge2& w2);

} // namespace viewsel

#endif
