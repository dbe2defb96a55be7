#include "escape/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace escape {

namespace {

constexpr double kPi = kTwoPi / 2.0;

Point rotated(Point p, double c, double s) { return {c * p.x - s * p.y, s * p.x + c * p.y}; }

} // namespace

ZigZagPath besicovitch_path() {
    ZigZagPath z;
    z.alpha = std::asin(1.0 / std::sqrt(28.0));
    z.segment_length = std::sqrt(3.0 / 28.0);
    z.total_length = 3.0 * z.segment_length;
    const double a2 = 2.0 * z.alpha;
    const Point u{std::cos(a2), std::sin(a2)};
    const Point z1{0.0, 0.0};
    const Point z2{z.segment_length, 0.0};
    z.vertices = {z1 - z.segment_length * u, z1, z2, z2 + z.segment_length * u};
    return z;
}

ZalgallerPath zalgaller_path() {
    ZalgallerPath z;
    z.phi = std::asin(1.0 / 6.0 + 4.0 / 3.0 * std::sin(std::asin(17.0 / 64.0) / 3.0));
    z.x = 1.0 / std::cos(z.phi);
    z.psi = std::atan(z.x / 2.0);
    z.arc_sweep = kPi / 2.0 - 2.0 * z.psi - z.phi;
    z.arc_radius = 1.0;

    const Point Z1{0.0, 0.0};
    const Point Z7{z.x, 0.0};
    const Point Z2{z.x - std::cos(z.phi), std::sin(z.phi)};
    const double t3 = kPi / 2.0 + 2.0 * z.psi; // circle angle of Z3 around Z7
    const Point Z3 = Z7 + Point{std::cos(t3), std::sin(t3)};
    const Point Z4{z.x / 2.0, 1.0};
    const double t5 = kPi / 2.0 - 2.0 * z.psi; // circle angle of Z5 around Z1
    const Point Z5{std::cos(t5), std::sin(t5)};
    const Point Z6{std::cos(z.phi), std::sin(z.phi)};
    z.vertices = {Z1, Z2, Z3, Z4, Z5, Z6, Z7};
    z.arc_center_left = Z7;
    z.arc_center_right = Z1;
    z.total_length = 2.0 * (std::tan(z.phi) + z.arc_sweep + z.x / 2.0);
    return z;
}

Point ZalgallerPath::at(double t) const {
    const double seg1 = std::tan(phi);
    const double arc = arc_sweep;
    const double seg2 = x / 2.0;
    t = std::clamp(t, 0.0, total_length);
    const Point& Z1 = vertices[0];
    const Point& Z2 = vertices[1];
    const Point& Z3 = vertices[2];
    const Point& Z4 = vertices[3];
    const Point& Z5 = vertices[4];
    const Point& Z6 = vertices[5];
    const Point& Z7 = vertices[6];
    if (t <= seg1) {
        const double f = t / seg1;
        return Z1 + f * (Z2 - Z1);
    }
    t -= seg1;
    if (t <= arc) {
        const double a = (kPi - phi) - t; // clockwise from Z2 toward Z3
        return arc_center_left + Point{std::cos(a), std::sin(a)};
    }
    t -= arc;
    if (t <= seg2) {
        const double f = t / seg2;
        return Z3 + f * (Z4 - Z3);
    }
    t -= seg2;
    if (t <= seg2) {
        const double f = t / seg2;
        return Z4 + f * (Z5 - Z4);
    }
    t -= seg2;
    if (t <= arc) {
        const double a = (kPi / 2.0 - 2.0 * psi) - t; // clockwise from Z5 toward Z6
        return arc_center_right + Point{std::cos(a), std::sin(a)};
    }
    t -= arc;
    const double f = std::clamp(t / seg1, 0.0, 1.0);
    return Z6 + f * (Z7 - Z6);
}

namespace {

/// Signed clearance of p inside poly: min over edges of the inner distance.
double clearance(const Polygon& poly, Point p) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto [a, b] = poly.edge(i);
        const Point t = b - a;
        best = std::min(best, cross(t, p - a) / norm(t));
    }
    return best;
}

/// Length along the placed polyline until the boundary is first touched.
/// Returns infinity when the whole path stays strictly inside. The clearance
/// is concave along a segment for convex environments, so touching implies an
/// endpoint sign change.
double polyline_escape_length(const Polygon& poly, Point s, const std::vector<Point>& path,
                              double rot) {
    const double c = std::cos(rot);
    const double sn = std::sin(rot);
    const double tol = poly.epsilon();
    const Point origin = path.front();
    double travelled = 0.0;
    Point prev = s;
    if (clearance(poly, prev) <= tol) return 0.0;
    for (std::size_t k = 1; k < path.size(); ++k) {
        const Point rel = path[k] - origin;
        const Point cur = s + rotated(rel, c, sn);
        const double seg = distance(prev, cur);
        if (clearance(poly, cur) <= tol) {
            double lo = 0.0, hi = 1.0;
            for (int it = 0; it < 80 && hi - lo > 1e-13; ++it) {
                const double mid = 0.5 * (lo + hi);
                const Point pm = prev + mid * (cur - prev);
                if (clearance(poly, pm) <= tol) hi = mid;
                else lo = mid;
            }
            return travelled + hi * seg;
        }
        travelled += seg;
        prev = cur;
    }
    return std::numeric_limits<double>::infinity();
}

} // namespace

double worst_polyline_escape(const Polygon& poly, Point s, const std::vector<Point>& path,
                             int rotation_samples) {
    double worst = -1.0;
    double worst_rot = 0.0;
    for (int i = 0; i < rotation_samples; ++i) {
        const double rot = kTwoPi * i / rotation_samples;
        const double len = polyline_escape_length(poly, s, path, rot);
        if (std::isfinite(len) && len > worst) {
            worst = len;
            worst_rot = rot;
        }
    }
    double half = kTwoPi / rotation_samples;
    for (int round = 0; round < 4; ++round) {
        const double center = worst_rot;
        constexpr int kLocal = 20;
        for (int i = -kLocal; i <= kLocal; ++i) {
            const double rot = center + half * i / kLocal;
            const double len = polyline_escape_length(poly, s, path, rot);
            if (std::isfinite(len) && len > worst) {
                worst = len;
                worst_rot = rot;
            }
        }
        half /= kLocal;
    }
    return worst;
}

std::vector<EscapeComparison> triangle_dominance(int samples) {
    const Polygon tri = Polygon::from_vertices(
        {{0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}});
    const ZigZagPath zig = besicovitch_path();
    std::vector<EscapeComparison> rows;
    rows.reserve(samples);

    // deterministic low-discrepancy-ish sweep of the interior
    const int grid = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(samples) * 2.0)));
    const double margin = 2e-3;
    int produced = 0;
    for (int i = 1; i < grid && produced < samples; ++i) {
        for (int j = 1; j < grid - i && produced < samples; ++j) {
            const double u = static_cast<double>(i) / grid;
            const double v = static_cast<double>(j) / grid;
            const Point s{u + 0.5 * v, v * std::sqrt(3.0) / 2.0};
            if (kernel_margin(tri, s) < margin) continue;
            EscapeComparison row;
            row.start = s;
            row.baseline_worst = worst_polyline_escape(tri, s, zig.vertices, 360);
            row.certificate_length = certificate(tri, s).length;
            row.dominated = row.certificate_length <= row.baseline_worst + 1e-9;
            rows.push_back(row);
            ++produced;
        }
    }
    return rows;
}

double zalgaller_rotated_exit(double d) {
    const ZalgallerPath z = zalgaller_path();
    const Point Z1 = z.vertices[0];
    const Point Z4 = z.vertices[3];
    const double D = distance(Z1, Z4);
    const double theta0 = std::atan2(Z4.y - Z1.y, Z4.x - Z1.x);
    const double target = std::asin(std::clamp((1.0 - d) / D, -1.0, 1.0));
    // the branch keeping Z3 and Z5 inside the strip
    const double rho = target - theta0;
    const double c = std::cos(rho);
    const double sn = std::sin(rho);
    auto place = [&](Point p) {
        const Point q = rotated(p - Z1, c, sn);
        return Point{q.x, q.y + d};
    };

    // walk pieces; strict crossing of y=0 or y=1 (touching does not exit)
    constexpr int kSteps = 4000;
    double prev_t = 0.0;
    const double tol = 1e-12;
    for (int i = 1; i <= kSteps; ++i) {
        const double t = z.total_length * i / kSteps;
        const Point cur = place(z.at(t));
        if (cur.y > 1.0 + tol || cur.y < -tol) {
            double lo = prev_t, hi = t;
            for (int it = 0; it < 80 && hi - lo > 1e-14; ++it) {
                const double mid = 0.5 * (lo + hi);
                const Point pm = place(z.at(mid));
                if (pm.y > 1.0 + tol || pm.y < -tol) hi = mid;
                else lo = mid;
            }
            return hi;
        }
        prev_t = t;
    }
    return std::numeric_limits<double>::infinity();
}

std::vector<StripComparison> strip_dominance(int samples) {
    // strip modeled as a 20 x 1 rectangle; starts on the vertical midline
    const Polygon rect = Polygon::from_vertices(
        {{-10.0, 0.0}, {10.0, 0.0}, {10.0, 1.0}, {-10.0, 1.0}});
    std::vector<StripComparison> rows;
    rows.reserve(samples);
    for (int k = 0; k < samples; ++k) {
        StripComparison row;
        row.d = 0.5 * static_cast<double>(k + 1) / samples; // (0, 1/2]
        row.certificate_length = certificate(rect, Point{0.0, row.d}).length;
        row.rotated_exit_length = zalgaller_rotated_exit(row.d);
        row.dominated = row.certificate_length <= 2.11 &&
                        row.rotated_exit_length >= 2.13 - 1e-9;
        rows.push_back(row);
    }
    return rows;
}

} // namespace escape
