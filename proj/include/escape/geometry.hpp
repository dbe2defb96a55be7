#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace escape {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double t, Point p) { return {t * p.x, t * p.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
double norm(Point p);
double distance(Point a, Point b);

/// Normalize an angle into [0, 2pi).
double normalize_angle(double a);
/// Counter-clockwise sweep from angle `from` to angle `to`, in [0, 2pi).
double ccw_delta(double from, double to);

class GeometryError : public std::runtime_error {
public:
    explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

class NotInKernel : public GeometryError {
public:
    explicit NotInKernel(const std::string& what) : GeometryError(what) {}
};

class DegenerateInput : public GeometryError {
public:
    explicit DegenerateInput(const std::string& what) : GeometryError(what) {}
};

/// Simple closed polygon. Vertices are stored counter-clockwise; clockwise
/// input is reversed on construction.
struct Polygon {
    std::vector<Point> vertices;

    static Polygon from_vertices(std::vector<Point> vs);

    std::size_t size() const { return vertices.size(); }
    Point vertex(std::size_t i) const { return vertices[i % vertices.size()]; }
    std::pair<Point, Point> edge(std::size_t i) const {
        return {vertices[i % vertices.size()], vertices[(i + 1) % vertices.size()]};
    }

    double signed_area() const;
    double diameter() const;
    /// Absolute tolerance used for geometric comparisons on this instance.
    double epsilon() const;
    /// Closed containment test (boundary counts as inside).
    bool contains(Point p) const;
};

/// True iff no two non-adjacent edges intersect and adjacent edges meet only
/// at their shared vertex.
bool is_simple(const Polygon& poly);

/// True iff every boundary point is visible from s, i.e. s lies in the
/// intersection of all inner edge half-planes (closed kernel).
bool in_kernel(const Polygon& poly, Point s);

/// Smallest signed distance from s to the supporting lines of the edges.
/// Positive iff s is strictly inside the kernel; the magnitude is the margin.
double kernel_margin(const Polygon& poly, Point s);

/// Throws NotInKernel / DegenerateInput unless s is inside the kernel with
/// margin at least poly.epsilon().
void require_kernel_interior(const Polygon& poly, Point s);

/// Radial distance function f(phi) = distance from the center to the unique
/// boundary crossing in direction phi. Defined for kernel points only.
struct RadialProfile {
    struct Span {
        double angle_lo = 0.0;      // direction of the edge's first vertex
        double line_distance = 0.0; // distance from center to the supporting line
        double foot_angle = 0.0;    // direction of the foot of the perpendicular
        int edge = 0;
    };

    Point center;
    std::vector<Span> spans; // sorted by angle_lo, covering [0, 2pi) cyclically
    double min_distance = 0.0;
    double max_distance = 0.0;

    double operator()(double phi) const;
    const Span& span_at(double phi) const;
    /// Breakpoints (vertex direction, vertex distance), sorted by angle.
    std::vector<std::pair<double, double>> breakpoints() const;
};

RadialProfile radial_profile(const Polygon& poly, Point s);

struct CircleIntersections {
    struct Hit {
        double angle = 0.0;
        bool tangential = false;
    };
    double radius = 0.0;
    std::vector<Hit> hits; // strictly increasing angles in [0, 2pi)
};

/// All angles at which the circle of the given radius around s meets the
/// polygon boundary. Tangential contact is reported as a flagged hit.
CircleIntersections circle_boundary_hits(const Polygon& poly, Point s, double radius);

/// Angular measure of the largest arc of the circle of radius x around s that
/// lies fully inside the polygon: 2pi if the circle is entirely inside, 0 if
/// no point of it is strictly inside.
double max_inside_arc(const Polygon& poly, Point s, double x);
double max_inside_arc(const RadialProfile& profile, const CircleIntersections& hits);

} // namespace escape
