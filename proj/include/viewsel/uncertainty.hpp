#ifndef VIEWSEL_UNCERTAINTY_HPP
#define VIEWSEL_UNCERTAINTY_HPP

#include "viewsel/geometry.hpp"

namespace viewsel {

// Projection error bound in radians. The closed-form two-camera bound needs
// alpha < 0.25 for its small-angle step, so that is enforced here rather
// than the weaker pi/4 limit of the raw wedge type.
class AlphaBound {
public:
    explicit AlphaBound(double alpha) : alpha_(alpha) {
        if (!(alpha > 0.0 && alpha < 0.25))
            throw std::invalid_argument("AlphaBound: alpha must be in (0, 0.25) rad");
    }
    double value() const { return alpha_; }

private:
    double alpha_;
};

// Closed interval of bisector angles theta such that the wedge (s, theta,
// alpha) contains the target.
struct OrientationInterval {
    double lo, hi;
    double width() const { return hi - lo; }
};

// Two cameras and a target in the 2D (vertical-plane) analysis frame. The
// target must lie strictly off the line through the cameras; the frame is
// oriented so it sits below that line.
struct PairConfig {
    Point2 s_p, s_q, g;
    AlphaBound alpha;

    PairConfig(const Point2& s_p, const Point2& s_q, const Point2& g, AlphaBound alpha);
};

struct WorstCase2D {
    double eps = 0.0;       // worst-case intersection diameter
    double theta_p = 0.0;   // maximizing orientations, per-camera convention
    double theta_q = 0.0;   //   (each measured toward the other camera)
    ConvexPolygon2 polygon; // intersection at the maximizer, world frame
    bool bounded = true;    // false: some admissible orientation pair leaves
                            // the intersection unbounded and eps is +inf
};

// [beta - alpha, beta + alpha] where beta is the angle of ray s -> g
// measured downward from the +x direction of the viewing line through s.
OrientationInterval admissible_orientations(const Point2& s, const Point2& g, AlphaBound alpha);

// Maximizes the intersection diameter over a sweep_n x sweep_n orientation
// grid spanning the admissible product, then refines around the argmax at
// x10 resolution. Deterministic: ties keep the lexicographically smallest
// (theta_p, theta_q).
WorstCase2D worst_case_pair(const PairConfig& cfg, int sweep_n = 256);

// sqrt((1+2a)/(1-4a)) * 2h sin(2a) / (1 - sin(2a))
double eps2_upper_bound(double h, AlphaBound alpha);

struct EpsInfBracket {
    double lo;  // diag1 of the optimal configuration: 2h sin(2a)/(1 - sin(2a))
    double hi;  // sweep-measured eps_2 of the optimal pair
};

EpsInfBracket eps_inf_bracket(double h, AlphaBound alpha, int sweep_n = 256);

// Vertical segment cut through the target by a third camera at (s_k_x, h),
// rotated so its inner half-plane passes through the target:
// 2h sin(2a) / (sin(2 theta_k) - sin(2a)) with theta_k = atan2(h, |s_k_x|) + alpha.
// Never falls below the optimal-pair diag1.
double third_camera_segment(double s_k_x, double h, AlphaBound alpha);

// Worst case for a 3D camera pair: the 2D sweep run in the plane through
// s_p, s_q and g; the cross-section diagonal bounds the 3D diameter.
// Returns +inf when some admissible orientation pair is unbounded (the pair
// subtends too small an angle at the target to be useful).
double worst_case_pair_3d(const Point3& s_p, const Point3& s_q, const Point3& g,
                          AlphaBound alpha, int sweep_n = 256);

// Optimal-pair helpers (baseline t = 2h / tan(pi/4 - alpha), both cameras
// viewing the target at pi/4).
double optimal_baseline(double h, AlphaBound alpha);
PairConfig optimal_pair_config(double h, AlphaBound alpha);

namespace detail {

// Shared reduced-frame sweep: cameras at (x1, h) and (x2, h), target at the
// origin. Returns eps (+inf if any admissible orientation is unbounded) and
// the maximizing generic bisector angles.
struct ReducedSweepResult {
    double eps;
    double theta1, theta2;  // generic downward angles from +x
    bool bounded;
};
ReducedSweepResult sweep_reduced_pair(double x1, double x2, double h, double alpha, int sweep_n);

} // namespace detail

} // namespace viewsel

#endif
