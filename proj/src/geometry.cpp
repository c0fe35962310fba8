#include "viewsel/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace viewsel {

namespace {

bool finite2(const Point2& p) { return std::isfinite(p.x()) && std::isfinite(p.y()); }

double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

// Characteristic length of a wedge pair, used to scale tolerances.
double pair_scale(const Wedge2& w1, const Wedge2& w2) {
    return std::max({1.0, w1.apex.norm(), w2.apex.norm(), (w1.apex - w2.apex).norm()});
}

} // namespace

Wedge2::Wedge2(const Point2& apex, double theta, double alpha)
    : apex(apex), theta(theta), alpha(alpha) {
    if (!finite2(apex)) throw std::invalid_argument("Wedge2: apex must be finite");
    if (!(alpha > 0.0 && alpha < M_PI / 4.0))
        throw std::invalid_argument("Wedge2: alpha must be in (0, pi/4)");
    if (!(alpha < theta && theta + alpha < M_PI))
        throw std::invalid_argument("Wedge2: need alpha < theta and theta + alpha < pi");
}

HalfPlane2::HalfPlane2(const Point2& boundary_point, const Vec2& inward_normal)
    : boundary_point(boundary_point), inward_normal(inward_normal) {
    if (!finite2(boundary_point) || !finite2(inward_normal))
        throw std::invalid_argument("HalfPlane2: non-finite input");
    if (std::abs(inward_normal.norm() - 1.0) > kGeomTol)
        throw std::invalid_argument("HalfPlane2: normal must have unit length");
}

Cone3::Cone3(const Point3& apex, const Vec3& axis, double alpha)
    : apex(apex), axis(axis), alpha(alpha) {
    if (std::abs(axis.norm() - 1.0) > kGeomTol)
        throw std::invalid_argument("Cone3: axis must have unit length");
    if (!(alpha > 0.0 && alpha < M_PI / 4.0))
        throw std::invalid_argument("Cone3: alpha must be in (0, pi/4)");
}

bool Cone3::contains(const Point3& p, double tol) const {
    Vec3 v = p - apex;
    double n = v.norm();
    if (n == 0.0) return true;
    return axis.dot(v) >= n * std::cos(alpha) - tol;
}

std::pair<HalfPlane2, HalfPlane2> wedge_halfplanes(const Wedge2& w) {
    // Boundary line at downward angle phi has direction (cos phi, -sin phi);
    // the wedge bisector lies on the -(sin phi, cos phi) side of the inner
    // line and on the +(sin phi, cos phi) side of the outer one.
    double in = w.theta - w.alpha;
    double out = w.theta + w.alpha;
    HalfPlane2 inner(w.apex, Vec2(-std::sin(in), -std::cos(in)));
    HalfPlane2 outer(w.apex, Vec2(std::sin(out), std::cos(out)));
    return {inner, outer};
}

ConvexPolygon2 ConvexPolygon2::from_ccw(std::vector<Point2> vertices) {
    if (vertices.size() < 3)
        throw std::invalid_argument("ConvexPolygon2: need at least 3 vertices");
    double scale = 1.0;
    for (const auto& v : vertices) {
        if (!finite2(v)) throw std::invalid_argument("ConvexPolygon2: non-finite vertex");
        scale = std::max(scale, v.lpNorm<Eigen::Infinity>());
    }
    const double tol = kGeomTol * scale;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Point2& a = vertices[i];
        const Point2& b = vertices[(i + 1) % vertices.size()];
        if ((a - b).norm() <= tol)
            throw std::invalid_argument("ConvexPolygon2: duplicate consecutive vertices");
    }
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Point2& a = vertices[i];
        const Point2& b = vertices[(i + 1) % vertices.size()];
        const Point2& c = vertices[(i + 2) % vertices.size()];
        if (cross2(b - a, c - b) < -kGeomTol * scale * scale)
            throw std::invalid_argument("ConvexPolygon2: vertices not convex CCW");
    }
    ConvexPolygon2 poly;
    poly.vertices_ = std::move(vertices);
    return poly;
}

bool ConvexPolygon2::contains(const Point2& p, double tol) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const Point2& a = vertices_[i];
        const Point2& b = vertices_[(i + 1) % vertices_.size()];
        if (cross2(b - a, p - a) < -tol) return false;
    }
    return true;
}

ConvexPolygon2 intersect_wedges(const Wedge2& w1, const Wedge2& w2) {
    const double scale = pair_scale(w1, w2);
    const double box_half = 0.5e6 * scale;
    const double eps = kGeomTol * scale;

    Point2 center = 0.5 * (w1.apex + w2.apex);
    std::vector<Point2> poly = {
        center + Vec2(-box_half, -box_half),
        center + Vec2(box_half, -box_half),
        center + Vec2(box_half, box_half),
        center + Vec2(-box_half, box_half),
    };

    auto [in1, out1] = wedge_halfplanes(w1);
    auto [in2, out2] = wedge_halfplanes(w2);
    for (const HalfPlane2& hp : {in1, out1, in2, out2}) {
        std::vector<Point2> clipped;
        clipped.reserve(poly.size() + 1);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const Point2& cur = poly[i];
            const Point2& nxt = poly[(i + 1) % poly.size()];
            double dc = hp.inward_normal.dot(cur - hp.boundary_point);
            double dn = hp.inward_normal.dot(nxt - hp.boundary_point);
            if (dc >= -eps) clipped.push_back(cur);
            if ((dc > eps && dn < -eps) || (dc < -eps && dn > eps)) {
                double t = dc / (dc - dn);
                clipped.push_back(cur + t * (nxt - cur));
            }
        }
        poly = std::move(clipped);
        if (poly.empty()) break;
    }

    // Collapse duplicates introduced by clips through existing vertices.
    std::vector<Point2> dedup;
    dedup.reserve(poly.size());
    for (const Point2& v : poly) {
        if (dedup.empty() || (dedup.back() - v).norm() > eps) dedup.push_back(v);
    }
    while (dedup.size() > 1 && (dedup.front() - dedup.back()).norm() <= eps) dedup.pop_back();

    if (dedup.size() < 3) throw EmptyIntersection("intersect_wedges: wedges are disjoint");

    const double edge_eps = box_half * (1.0 - 1e-9);
    for (const Point2& v : dedup) {
        Vec2 d = v - center;
        if (std::abs(d.x()) >= edge_eps || std::abs(d.y()) >= edge_eps)
            throw UnboundedIntersection(
                "intersect_wedges: boundary directions do not close the region");
    }
    return ConvexPolygon2::from_ccw(std::move(dedup));
}

double polygon_diameter(const ConvexPolygon2& p) {
    double best = 0.0;
    const auto& v = p.vertices();
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            best = std::max(best, (v[i] - v[j]).squaredNorm());
    return std::sqrt(best);
}

EdgeLengths edge_lengths(double t, double theta_p, double theta_q, double alpha) {
    if (!(t > 0.0)) throw std::invalid_argument("edge_lengths: t must be positive");
    if (!(theta_p - alpha > 0.0 && theta_q - alpha > 0.0))
        throw std::invalid_argument("edge_lengths: need theta_p, theta_q > alpha");
    const double sum = theta_p + theta_q;
    const double den_low = std::sin(sum - 2.0 * alpha);
    const double den_mid = std::sin(sum);
    const double den_high = std::sin(sum + 2.0 * alpha);
    if (den_low <= 1e-12 || den_mid <= 1e-12 || den_high <= 1e-12)
        throw DegenerateConfiguration("edge_lengths: wedge boundaries nearly parallel");
    const double s2a = std::sin(2.0 * alpha);
    EdgeLengths r;
    r.r1 = t * std::sin(theta_q - alpha) * s2a / (den_low * den_mid);
    r.r2 = t * std::sin(theta_p + alpha) * s2a / (den_mid * den_high);
    r.r3 = t * std::sin(theta_q + alpha) * s2a / (den_mid * den_high);
    r.r4 = t * std::sin(theta_p - alpha) * s2a / (den_low * den_mid);
    return r;
}

DiagLengths diag_lengths(const EdgeLengths& r, double theta_p, double theta_q, double alpha) {
    const double sum = theta_p + theta_q;
    DiagLengths d;
    d.diag1 = std::sqrt(r.r1 * r.r1 + r.r2 * r.r2 - 2.0 * r.r1 * r.r2 * std::cos(sum));
    d.diag2 = std::sqrt(r.r1 * r.r1 + r.r4 * r.r4 -
                        2.0 * r.r1 * r.r4 * std::cos(M_PI - sum + 2.0 * alpha));
    return d;
}

double cone_slice_length(double theta, double alpha, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("cone_slice_length: h must be positive");
    if (!(alpha > 0.0 && alpha < M_PI / 4.0))
        throw std::invalid_argument("cone_slice_length: alpha must be in (0, pi/4)");
    const double den = std::sin(2.0 * theta) - std::sin(2.0 * alpha);
    if (den <= 1e-12)
        throw DegenerateConfiguration("cone_slice_length: sin(2 theta) <= sin(2 alpha)");
    return 2.0 * h * std::sin(2.0 * alpha) / den;
}

std::array<Point2, 4> wedge_pair_vertices(const Wedge2& w1, const Wedge2& w2) {
    const Wedge2& a = (w1.theta <= w2.theta) ? w1 : w2;
    const Wedge2& b = (w1.theta <= w2.theta) ? w2 : w1;
    const double scale = pair_scale(w1, w2);
    if (b.theta - a.theta <= a.alpha + b.alpha + kGeomTol)
        throw UnboundedIntersection("wedge_pair_vertices: overlapping direction sectors");

    auto inter = [&](double phi_a, double phi_b) {
        Vec2 da = Wedge2::ray_direction(phi_a);
        Vec2 db = Wedge2::ray_direction(phi_b);
        double denom = cross2(da, db);
        Vec2 ab = b.apex - a.apex;
        double s = cross2(ab, db) / denom;
        double u = cross2(ab, da) / denom;
        if (s < -kGeomTol * scale || u < -kGeomTol * scale)
            throw EmptyIntersection("wedge_pair_vertices: boundary rays do not cross");
        return Point2(a.apex + s * da);
    };

    // v1 = shallow x shallow, v2 = left, v3 = steep x steep, v4 = right (CCW).
    return {inter(a.theta - a.alpha, b.theta + b.alpha),
            inter(a.theta + a.alpha, b.theta + b.alpha),
            inter(a.theta + a.alpha, b.theta - b.alpha),
            inter(a.theta - a.alpha, b.theta - b.alpha)};
}

} // namespace viewsel
