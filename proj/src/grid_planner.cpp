#include "viewsel/grid_planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "viewsel/parallel.hpp"

namespace viewsel {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double diag1_closed_form(double h, double alpha) {
    double s2a = std::sin(2.0 * alpha);
    return 2.0 * h * s2a / (1.0 - s2a);
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    double step = (n > 1) ? (hi - lo) / (n - 1) : 0.0;
    for (int i = 0; i < n; ++i) v[i] = lo + step * i;
    return v;
}

struct Offset {
    double dx, dy;
};

// Sample grid over the target cell; when symmetric, restricted to the
// fundamental domain of the cell's reflection/swap symmetries (exact for a
// cell centered in a large lattice).
std::vector<Offset> cell_offsets(double half, int samples, bool two_d, bool symmetric) {
    std::vector<Offset> out;
    auto xs = linspace(-half, half, samples);
    if (!two_d) {
        for (double x : xs)
            if (!symmetric || x >= -1e-15) out.push_back({x, 0.0});
        return out;
    }
    for (double x : xs)
        for (double y : xs) {
            if (symmetric && (y < -1e-15 || y > x + 1e-15)) continue;
            out.push_back({x, y});
        }
    return out;
}

} // namespace

OptimalPair optimal_pair(const Point3& g, double h, AlphaBound alpha) {
    double t = optimal_baseline(h, alpha);
    OptimalPair p;
    p.t = t;
    p.theta = M_PI / 4.0;
    p.s_p = g + Point3(-t / 2.0, 0.0, h);
    p.s_q = g + Point3(t / 2.0, 0.0, h);
    return p;
}

CameraGrid build_grid(double extent_x, double extent_y, double h) {
    if (!(extent_x > 0.0) || extent_y < 0.0)
        throw std::invalid_argument("build_grid: extents must be positive");
    if (!(h > 0.0)) throw std::invalid_argument("build_grid: h must be positive");
    CameraGrid grid;
    grid.spacing = h;
    grid.origin = Point3(0.0, 0.0, h);
    grid.nx = static_cast<int>(std::floor(extent_x / h + 1e-9)) + 1;
    grid.ny = static_cast<int>(std::floor(extent_y / h + 1e-9)) + 1;
    return grid;
}

TargetRegion make_target_region(const CameraGrid& grid, const Point3& g) {
    double fx = (g.x() - grid.origin.x()) / grid.spacing;
    double fy = (g.y() - grid.origin.y()) / grid.spacing;
    if (std::abs(fx - std::round(fx)) > 1e-9 || std::abs(fy - std::round(fy)) > 1e-9)
        throw std::invalid_argument("make_target_region: g is not on the ground lattice");
    return {g, grid.spacing / 2.0};
}

Perturbation::Perturbation(double lambda_v, double lambda_h)
    : lambda_v(lambda_v), lambda_h(lambda_h) {
    if (!(lambda_v >= 0.0 && lambda_v < 1.0 && lambda_h >= 0.0 && lambda_h < 1.0))
        throw std::invalid_argument("Perturbation: lambdas must be in [0, 1)");
}

double perturbation_factor(const Perturbation& p) {
    return (1.0 + p.lambda_v) / (1.0 - p.lambda_h);
}

double angle_sum(double m, double h, AlphaBound alpha) {
    if (!(h > 0.0)) throw std::invalid_argument("angle_sum: h must be positive");
    if (std::abs(m) > h / 2.0 * (1.0 + 1e-9))
        throw std::invalid_argument("angle_sum: |m| must not exceed h/2");
    double a = alpha.value();
    double c = h / std::tan(M_PI / 4.0 - a);
    return std::atan(h / (c - m)) + std::atan(h / (c + m)) + 2.0 * a;
}

GridUncertainty grid_uncertainty(const Point3& g, const CameraGrid& grid, AlphaBound alpha,
                                 const GridQueryOptions& opts) {
    if (grid.count() < 2) throw std::invalid_argument("grid_uncertainty: need >= 2 cameras");
    double h = grid.origin.z() - g.z();
    if (!(h > 0.0)) throw std::invalid_argument("grid_uncertainty: target must lie below the grid");
    const double tol = 1e-9 * h;

    auto accept = [&](int i, int j) {
        if (opts.exhaustive) return true;
        Point3 pi = grid.point_by_id(i), pj = grid.point_by_id(j);
        double bx = pi.x() - pj.x(), by = pi.y() - pj.y();
        double baseline = std::hypot(bx, by);
        if (baseline < h - tol || baseline > 4.0 * h + tol) return false;
        double mx = 0.5 * (pi.x() + pj.x()) - g.x();
        double my = 0.5 * (pi.y() + pj.y()) - g.y();
        return std::hypot(mx, my) <= 2.0 * h + tol;
    };

    GridUncertainty best;
    best.eps = kInf;
    for (int pass = 0; pass < 2 && best.pair.first < 0; ++pass) {
        // Second pass only when pruning left nothing (custom grid geometry).
        bool exhaustive_pass = (pass == 1);
        for (int i = 0; i < grid.count(); ++i) {
            for (int j = i + 1; j < grid.count(); ++j) {
                if (!exhaustive_pass && !accept(i, j)) continue;
                if (exhaustive_pass && accept(i, j)) continue;  // already tried
                double eps = worst_case_pair_3d(grid.point_by_id(i), grid.point_by_id(j), g,
                                                alpha, opts.sweep_n);
                if (eps < best.eps) {
                    best.eps = eps;
                    best.pair = {i, j};
                }
            }
        }
        if (opts.exhaustive) break;
    }
    return best;
}

CellWorst worst_in_cell(const Point3& g, const CameraGrid& grid, AlphaBound alpha,
                        const CellScanOptions& opts) {
    if (opts.samples < 9) throw std::invalid_argument("worst_in_cell: samples must be >= 9");
    double h = grid.origin.z() - g.z();
    bool two_d = grid.ny > 1;
    auto offsets = cell_offsets(grid.spacing / 2.0, opts.samples, two_d, opts.lattice_symmetric);

    std::vector<GridUncertainty> results(offsets.size());
    GridQueryOptions q{opts.sweep_n, opts.exhaustive};
    parallel_for(static_cast<int>(offsets.size()),
                 [&](int k) {
                     Point3 gk = g + Point3(offsets[k].dx, offsets[k].dy, 0.0);
                     results[k] = grid_uncertainty(gk, grid, alpha, q);
                 },
                 opts.threads);

    CellWorst out;
    out.eps = -1.0;
    for (std::size_t k = 0; k < offsets.size(); ++k) {
        if (results[k].eps > out.eps) {
            out.eps = results[k].eps;
            out.argmax_dx = offsets[k].dx;
            out.argmax_dy = offsets[k].dy;
            out.pair = results[k].pair;
        }
    }
    out.ratio = out.eps / diag1_closed_form(h, alpha.value());
    return out;
}

namespace {

// Worst-corner evaluation of a selected pair under +-lambda camera boxes.
// Horizontal pushes are radial with respect to the target's vertical line,
// matching the one-sided similar-triangle arguments.
double perturbed_pair_eps(const Point3& cam_i, const Point3& cam_j, const Point3& g, double h,
                          AlphaBound alpha, const Perturbation& p, int sweep_n) {
    auto displaced = [&](const Point3& c, int side, int vert) {
        Vec2 r(c.x() - g.x(), c.y() - g.y());
        double n = r.norm();
        Vec2 rhat = (n > 1e-12 * h) ? Vec2(r / n) : Vec2(1.0, 0.0);
        return Point3(c.x() + side * p.lambda_h * h * rhat.x(),
                      c.y() + side * p.lambda_h * h * rhat.y(),
                      c.z() + vert * p.lambda_v * h);
    };
    double worst = -1.0;
    for (int si : {-1, 1})
        for (int vi : {-1, 1})
            for (int sj : {-1, 1})
                for (int vj : {-1, 1}) {
                    double eps = worst_case_pair_3d(displaced(cam_i, si, vi),
                                                    displaced(cam_j, sj, vj), g, alpha, sweep_n);
                    worst = std::max(worst, eps);
                }
    return worst;
}

} // namespace

CertifyReport certify_grid_bound(const CameraGrid& grid, const std::vector<double>& alpha_list,
                                 const Perturbation& p, int dims, const CertifyOptions& opts) {
    if (alpha_list.empty()) throw std::invalid_argument("certify_grid_bound: empty alpha list");
    for (double a : alpha_list)
        if (!(a > 0.0 && a <= 0.1 + 1e-12))
            throw std::invalid_argument("certify_grid_bound: alphas must be in (0, 0.1]");
    if (dims != 2 && dims != 3) throw std::invalid_argument("certify_grid_bound: dims must be 2 or 3");
    if (dims == 2 && grid.ny != 1)
        throw std::invalid_argument("certify_grid_bound: 2D certification expects a camera row");
    if (dims == 3 && grid.ny < 2)
        throw std::invalid_argument("certify_grid_bound: 3D certification expects a full grid");

    // Candidate pairs live within 4.5h of the cell center; the representative
    // cell needs that much grid on every side.
    const int margin = 5;
    int ci = grid.nx / 2, cj = grid.ny / 2;
    if (std::min(ci, grid.nx - 1 - ci) < margin ||
        (dims == 3 && std::min(cj, grid.ny - 1 - cj) < margin))
        throw std::invalid_argument("certify_grid_bound: grid too small for an interior cell");

    const double h = grid.spacing;  // delta_d = h by construction
    Point3 cell_cam = grid.point(ci, cj);
    Point3 g0(cell_cam.x(), cell_cam.y(), cell_cam.z() - h);

    CertifyReport report;
    report.dims = dims;
    report.lambda_v = p.lambda_v;
    report.lambda_h = p.lambda_h;
    report.constant = (dims == 2) ? 1.72 : 2.47;
    double bound = report.constant * perturbation_factor(p) * opts.bound_scale;

    auto offsets = cell_offsets(h / 2.0, opts.samples, dims == 3, /*symmetric=*/true);
    const bool perturbed = (p.lambda_v > 0.0 || p.lambda_h > 0.0);

    for (double a : alpha_list) {
        AlphaBound alpha(a);
        std::vector<double> eps(offsets.size());
        std::vector<GridUncertainty> sel(offsets.size());
        GridQueryOptions q{opts.sweep_n, false};
        parallel_for(static_cast<int>(offsets.size()),
                     [&](int k) {
                         Point3 gk = g0 + Point3(offsets[k].dx, offsets[k].dy, 0.0);
                         sel[k] = grid_uncertainty(gk, grid, alpha, q);
                         if (perturbed) {
                             eps[k] = perturbed_pair_eps(grid.point_by_id(sel[k].pair.first),
                                                         grid.point_by_id(sel[k].pair.second), gk,
                                                         h, alpha, p, opts.sweep_n);
                         } else {
                             eps[k] = sel[k].eps;
                         }
                     },
                     opts.threads);

        CellCertificate cert;
        cert.alpha = a;
        cert.cell_ix = ci;
        cert.cell_iy = cj;
        cert.eps = -1.0;
        for (std::size_t k = 0; k < offsets.size(); ++k) {
            if (eps[k] > cert.eps) {
                cert.eps = eps[k];
                cert.argmax_dx = offsets[k].dx;
                cert.argmax_dy = offsets[k].dy;
                cert.pair = sel[k].pair;
            }
        }
        cert.eps_inf_lo = diag1_closed_form(h, a);
        cert.ratio = cert.eps / cert.eps_inf_lo;
        cert.bound = bound;
        if (cert.ratio > bound) {
            BoundWitness w;
            w.alpha = a;
            w.lambda_v = p.lambda_v;
            w.lambda_h = p.lambda_h;
            w.dims = dims;
            w.ratio = cert.ratio;
            w.bound = bound;
            w.target_x = cert.argmax_dx;
            w.target_y = cert.argmax_dy;
            w.cam_i = cert.pair.first;
            w.cam_j = cert.pair.second;
            throw BoundViolation("certify_grid_bound: ratio exceeds the theorem bound", w);
        }
        report.cells.push_back(cert);
    }
    return report;
}

} // namespace viewsel
