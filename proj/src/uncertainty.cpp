#include "viewsel/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace viewsel {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct ReducedFrame {
    double x1, x2;  // camera abscissas, target at origin, viewing line at y = h
    double h;
    Vec2 u;       // world direction of the +x axis
    Vec2 up;      // world direction of the +y axis (from target toward the line)
    Point2 origin;
};

ReducedFrame reduce(const Point2& s_p, const Point2& s_q, const Point2& g) {
    ReducedFrame f;
    Vec2 d = s_q - s_p;
    double t = d.norm();
    f.u = d / t;
    Vec2 w = s_p - g;
    double xp = w.dot(f.u);
    Vec2 perp = w - xp * f.u;
    f.h = perp.norm();
    f.up = perp / f.h;
    f.x1 = xp;
    f.x2 = xp + t;
    f.origin = g;
    return f;
}

// Orientation interval for a camera at (x, h) viewing the origin, clamped to
// valid wedge bisector angles.
void admissible_clamped(double x, double h, double alpha, double& lo, double& hi) {
    double beta = std::atan2(h, -x);
    lo = std::max(beta - alpha, alpha + 1e-12);
    hi = std::min(beta + alpha, M_PI - alpha - 1e-12);
}

struct AxisTrig {
    std::vector<double> theta, cm, sm, cp, sp;  // cos/sin at theta -+ alpha
    void fill(double lo, double hi, int n, double alpha) {
        theta.resize(n);
        cm.resize(n); sm.resize(n); cp.resize(n); sp.resize(n);
        double step = (n > 1) ? (hi - lo) / (n - 1) : 0.0;
        for (int i = 0; i < n; ++i) {
            double t = lo + step * i;
            theta[i] = t;
            cm[i] = std::cos(t - alpha);
            sm[i] = std::sin(t - alpha);
            cp[i] = std::cos(t + alpha);
            sp[i] = std::sin(t + alpha);
        }
    }
};

// Diameter of the wedge-pair intersection at one orientation pair; +inf when
// the direction sectors overlap and the region is unbounded. Pure arithmetic
// on precomputed trig values.
inline double eval_pair(double x1, double x2, double h, double two_alpha,
                        double th1, double c1m, double s1m, double c1p, double s1p,
                        double th2, double c2m, double s2m, double c2p, double s2p) {
    double xa, xb, ca_m, sa_m, ca_p, sa_p, cb_m, sb_m, cb_p, sb_p;
    if (th1 <= th2) {
        if (th2 - th1 <= two_alpha + 1e-12) return kInf;
        xa = x1; ca_m = c1m; sa_m = s1m; ca_p = c1p; sa_p = s1p;
        xb = x2; cb_m = c2m; sb_m = s2m; cb_p = c2p; sb_p = s2p;
    } else {
        if (th1 - th2 <= two_alpha + 1e-12) return kInf;
        xa = x2; ca_m = c2m; sa_m = s2m; ca_p = c2p; sa_p = s2p;
        xb = x1; cb_m = c1m; sb_m = s1m; cb_p = c1p; sb_p = s1p;
    }
    const double dx = xb - xa;

    // Ray from (xa,h) at angle pa meets ray from (xb,h) at angle pb at
    // (xa + s ca, h - s sa) with s = dx sin(pb) / sin(pb - pa).
    auto vert = [&](double ca, double sa, double cb, double sb, double& px, double& py) {
        double s = dx * sb / (sb * ca - cb * sa);
        px = xa + s * ca;
        py = h - s * sa;
    };
    double v1x, v1y, v2x, v2y, v3x, v3y, v4x, v4y;
    vert(ca_m, sa_m, cb_p, sb_p, v1x, v1y);
    vert(ca_p, sa_p, cb_p, sb_p, v2x, v2y);
    vert(ca_p, sa_p, cb_m, sb_m, v3x, v3y);
    vert(ca_m, sa_m, cb_m, sb_m, v4x, v4y);

    auto d2 = [](double ax, double ay, double bx, double by) {
        double ex = ax - bx, ey = ay - by;
        return ex * ex + ey * ey;
    };
    double best = d2(v1x, v1y, v3x, v3y);
    best = std::max(best, d2(v2x, v2y, v4x, v4y));
    best = std::max(best, d2(v1x, v1y, v2x, v2y));
    best = std::max(best, d2(v2x, v2y, v3x, v3y));
    best = std::max(best, d2(v3x, v3y, v4x, v4y));
    best = std::max(best, d2(v4x, v4y, v1x, v1y));
    return std::sqrt(best);
}

} // namespace

namespace detail {

ReducedSweepResult sweep_reduced_pair(double x1, double x2, double h, double alpha, int sweep_n) {
    double lo1, hi1, lo2, hi2;
    admissible_clamped(x1, h, alpha, lo1, hi1);
    admissible_clamped(x2, h, alpha, lo2, hi2);

    const double two_alpha = 2.0 * alpha;
    AxisTrig a1, a2;
    a1.fill(lo1, hi1, sweep_n, alpha);
    a2.fill(lo2, hi2, sweep_n, alpha);

    ReducedSweepResult res{-1.0, lo1, lo2, true};
    int bi = 0, bj = 0;
    for (int i = 0; i < sweep_n && res.bounded; ++i) {
        for (int j = 0; j < sweep_n; ++j) {
            double v = eval_pair(x1, x2, h, two_alpha,
                                 a1.theta[i], a1.cm[i], a1.sm[i], a1.cp[i], a1.sp[i],
                                 a2.theta[j], a2.cm[j], a2.sm[j], a2.cp[j], a2.sp[j]);
            if (v == kInf) {
                res = {kInf, a1.theta[i], a2.theta[j], false};
                break;
            }
            if (v > res.eps) {
                res = {v, a1.theta[i], a2.theta[j], true};
                bi = i; bj = j;
            }
        }
    }
    if (!res.bounded) return res;

    // One local refinement pass at x10 resolution around the argmax.
    double step1 = (sweep_n > 1) ? (hi1 - lo1) / (sweep_n - 1) : 0.0;
    double step2 = (sweep_n > 1) ? (hi2 - lo2) / (sweep_n - 1) : 0.0;
    double rlo1 = std::max(lo1, a1.theta[bi] - step1), rhi1 = std::min(hi1, a1.theta[bi] + step1);
    double rlo2 = std::max(lo2, a2.theta[bj] - step2), rhi2 = std::min(hi2, a2.theta[bj] + step2);
    const int rn = 21;
    AxisTrig r1, r2;
    r1.fill(rlo1, rhi1, rn, alpha);
    r2.fill(rlo2, rhi2, rn, alpha);
    for (int i = 0; i < rn; ++i) {
        for (int j = 0; j < rn; ++j) {
            double v = eval_pair(x1, x2, h, two_alpha,
                                 r1.theta[i], r1.cm[i], r1.sm[i], r1.cp[i], r1.sp[i],
                                 r2.theta[j], r2.cm[j], r2.sm[j], r2.cp[j], r2.sp[j]);
            if (v != kInf && v > res.eps) res = {v, r1.theta[i], r2.theta[j], true};
        }
    }
    return res;
}

} // namespace detail

PairConfig::PairConfig(const Point2& s_p, const Point2& s_q, const Point2& g, AlphaBound alpha)
    : s_p(s_p), s_q(s_q), g(g), alpha(alpha) {
    double scale = std::max({1.0, s_p.norm(), s_q.norm(), g.norm()});
    if ((s_q - s_p).norm() <= kGeomTol * scale)
        throw std::invalid_argument("PairConfig: cameras must be distinct");
    Vec2 u = (s_q - s_p).normalized();
    Vec2 w = g - s_p;
    if ((w - w.dot(u) * u).norm() <= kGeomTol * scale)
        throw std::invalid_argument("PairConfig: target must lie off the camera line");
}

OrientationInterval admissible_orientations(const Point2& s, const Point2& g, AlphaBound alpha) {
    Vec2 d = g - s;
    double scale = std::max({1.0, s.norm(), g.norm()});
    if (d.norm() <= kGeomTol * scale)
        throw std::invalid_argument("admissible_orientations: s and g coincide");
    if (d.y() >= -kGeomTol * scale)
        throw std::invalid_argument("admissible_orientations: target must lie below the viewing line");
    double beta = std::atan2(-d.y(), d.x());
    return {beta - alpha.value(), beta + alpha.value()};
}

WorstCase2D worst_case_pair(const PairConfig& cfg, int sweep_n) {
    if (sweep_n < 32) throw std::invalid_argument("worst_case_pair: sweep_n must be >= 32");
    ReducedFrame f = reduce(cfg.s_p, cfg.s_q, cfg.g);
    auto res = detail::sweep_reduced_pair(f.x1, f.x2, f.h, cfg.alpha.value(), sweep_n);

    WorstCase2D out;
    out.theta_p = res.theta1;
    out.theta_q = M_PI - res.theta2;
    out.bounded = res.bounded;
    if (!res.bounded) {
        out.eps = kInf;
        return out;
    }

    auto quad = wedge_pair_vertices(Wedge2(Point2(f.x1, f.h), res.theta1, cfg.alpha.value()),
                                    Wedge2(Point2(f.x2, f.h), res.theta2, cfg.alpha.value()));
    std::vector<Point2> world(4);
    for (int i = 0; i < 4; ++i) world[i] = f.origin + quad[i].x() * f.u + quad[i].y() * f.up;
    // Mirror-image frames reverse the orientation.
    if (f.u.x() * f.up.y() - f.u.y() * f.up.x() < 0.0) std::reverse(world.begin(), world.end());
    out.polygon = ConvexPolygon2::from_ccw(std::move(world));
    out.eps = polygon_diameter(out.polygon);
    return out;
}

double eps2_upper_bound(double h, AlphaBound alpha) {
    if (!(h > 0.0)) throw std::invalid_argument("eps2_upper_bound: h must be positive");
    double a = alpha.value();
    double s2a = std::sin(2.0 * a);
    return std::sqrt((1.0 + 2.0 * a) / (1.0 - 4.0 * a)) * 2.0 * h * s2a / (1.0 - s2a);
}

double optimal_baseline(double h, AlphaBound alpha) {
    if (!(h > 0.0)) throw std::invalid_argument("optimal_baseline: h must be positive");
    return 2.0 * h / std::tan(M_PI / 4.0 - alpha.value());
}

PairConfig optimal_pair_config(double h, AlphaBound alpha) {
    double t = optimal_baseline(h, alpha);
    return PairConfig(Point2(-t / 2.0, h), Point2(t / 2.0, h), Point2(0.0, 0.0), alpha);
}

EpsInfBracket eps_inf_bracket(double h, AlphaBound alpha, int sweep_n) {
    if (!(h > 0.0)) throw std::invalid_argument("eps_inf_bracket: h must be positive");
    double s2a = std::sin(2.0 * alpha.value());
    double lo = 2.0 * h * s2a / (1.0 - s2a);
    double hi = worst_case_pair(optimal_pair_config(h, alpha), sweep_n).eps;
    // diag1 is attained at theta_p = theta_q = pi/4; guard against sweep
    // rounding dust just below it.
    if (hi < lo) hi = lo;
    return {lo, hi};
}

double third_camera_segment(double s_k_x, double h, AlphaBound alpha) {
    if (!(h > 0.0)) throw std::invalid_argument("third_camera_segment: h must be positive");
    double a = alpha.value();
    double theta_k = std::atan2(h, std::abs(s_k_x)) + a;
    double den = std::sin(2.0 * theta_k) - std::sin(2.0 * a);
    if (den <= 1e-12)
        throw DegenerateConfiguration(
            "third_camera_segment: wedge cannot bound the vertical line on both sides");
    return 2.0 * h * std::sin(2.0 * a) / den;
}

double worst_case_pair_3d(const Point3& s_p, const Point3& s_q, const Point3& g,
                          AlphaBound alpha, int sweep_n) {
    if (sweep_n < 32) throw std::invalid_argument("worst_case_pair_3d: sweep_n must be >= 32");
    double scale = std::max({1.0, s_p.norm(), s_q.norm(), g.norm()});
    Vec3 d = s_q - s_p;
    double t = d.norm();
    if (t <= kGeomTol * scale)
        throw CollinearConfiguration("worst_case_pair_3d: cameras coincide");
    Vec3 u = d / t;
    Vec3 w = g - s_p;
    double xg = w.dot(u);
    double h_eff = (w - xg * u).norm();
    if (h_eff <= kGeomTol * scale)
        throw CollinearConfiguration("worst_case_pair_3d: target collinear with cameras");
    return detail::sweep_reduced_pair(-xg, t - xg, h_eff, alpha.value(), sweep_n).eps;
}

} // namespace viewsel
