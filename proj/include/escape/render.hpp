#pragma once

#include "escape/certificate.hpp"
#include "escape/geometry.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace escape {

class EmptyScene : public GeometryError {
public:
    explicit EmptyScene(const std::string& what) : GeometryError(what) {}
};

namespace draw {

struct PolygonOutline {
    std::vector<Point> vertices;
    std::string stroke = "#1a1a1a";
};

struct Polyline {
    std::vector<Point> points;
    std::string stroke = "#0057b7";
};

struct CircularArc {
    Point center;
    double radius = 1.0;
    double start_angle = 0.0; // radians, counter-clockwise sweep
    double sweep = 0.0;
    std::string stroke = "#c43c00";
};

struct Marker {
    Point at;
    std::string fill = "#000000";
};

struct Label {
    Point at;
    std::string text;
};

using Drawable = std::variant<PolygonOutline, Polyline, CircularArc, Marker, Label>;

} // namespace draw

/// Ordered drawables with a viewbox derived from their extent plus a 5% margin.
struct Scene {
    std::vector<draw::Drawable> layers;
    void add(draw::Drawable d) { layers.push_back(std::move(d)); }
};

/// Deterministic SVG 1.1 document (fixed 6-decimal coordinates).
std::string render_scene(const Scene& scene);

/// Polar plot of the radial distance function, phi on [0, 2pi] horizontally.
/// When a certificate is given, its radius/arc hook is drawn into the plot.
std::string render_radial_profile(const RadialProfile& profile,
                                  const CertificateResult* cert = nullptr);

/// Convenience scenes used by the CLI.
Scene certificate_scene(const Polygon& poly, Point s, const CertificateResult& cert);
Scene spiral_scene(const Polygon& poly, Point s, double beta, double rotation);

} // namespace escape
