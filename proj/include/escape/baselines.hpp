#pragma once

#include "escape/certificate.hpp"
#include "escape/geometry.hpp"

#include <optional>
#include <vector>

namespace escape {

/// Besicovitch's three-segment escape path for the unit equilateral triangle.
/// Z-shaped: outer segments parallel, consecutive segments meet at angle
/// 2*alpha, each segment of length sqrt(3/28).
struct ZigZagPath {
    double alpha = 0.0;          // arcsin(1/sqrt(28))
    double segment_length = 0.0; // sqrt(3/28)
    double total_length = 0.0;   // 3*sqrt(3/28)
    std::vector<Point> vertices; // z0..z3, start at z0
};

ZigZagPath besicovitch_path();

/// Zalgaller's escape path for the strip of width l: four segments and two
/// unit-radius arcs, each arc centered at the opposite endpoint of the path.
struct ZalgallerPath {
    double phi = 0.0; // arcsin(1/6 + 4/3 sin(1/3 arcsin(17/64)))
    double psi = 0.0; // arctan(sec(phi)/2)
    double x = 0.0;   // sec(phi), baseline length in units of l
    double total_length = 0.0; // ~2.278292 (for l = 1)
    std::vector<Point> vertices; // Z1..Z7 for l = 1, baseline on the x-axis
    Point arc_center_left;  // center of the arc Z2->Z3 (= Z7)
    Point arc_center_right; // center of the arc Z5->Z6 (= Z1)
    double arc_radius = 1.0;
    double arc_sweep = 0.0; // pi/2 - 2*psi - phi, per arc

    /// Arc-length parametrization, t in [0, total_length].
    Point at(double t) const;
};

ZalgallerPath zalgaller_path();

struct EscapeComparison {
    Point start;
    double parameter = 0.0;      // sampling parameter (d for the strip)
    double baseline_worst = 0.0; // worst-case escape length of the named path
    double certificate_length = 0.0;
    bool dominated = false; // certificate <= baseline_worst + tolerance
};

/// Worst-case (over rotations) length of a polyline path walked from s until
/// it first touches the polygon boundary. Touching counts as escaping.
double worst_polyline_escape(const Polygon& poly, Point s, const std::vector<Point>& path,
                             int rotation_samples);

/// Besicovitch zig-zag vs certificate over sampled starts in the unit
/// equilateral triangle. Throws if dominance ever fails.
std::vector<EscapeComparison> triangle_dominance(int samples);

/// Zalgaller path vs certificate in the strip (modeled as a 20l x l
/// rectangle); samples d in (0, l/2]. Each row also carries the rotated-path
/// exit length, which must stay >= 2.13 l.
struct StripComparison {
    double d = 0.0;
    double certificate_length = 0.0;
    double rotated_exit_length = 0.0; // first strict wall crossing, Z4 on the far wall
    bool dominated = false;
};
std::vector<StripComparison> strip_dominance(int samples);

/// Exit length of Zalgaller's path rotated around Z1 (start at distance d
/// from the lower wall of a width-1 strip) so that Z4 lies on the upper wall.
/// Tangential contact at Z4 does not count; returns the first strict crossing.
double zalgaller_rotated_exit(double d);

} // namespace escape
