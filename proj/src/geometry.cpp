#include "escape/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace escape {

double norm(Point p) { return std::hypot(p.x, p.y); }
double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

double normalize_angle(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;
    return r;
}

double ccw_delta(double from, double to) {
    return normalize_angle(to - from);
}

Polygon Polygon::from_vertices(std::vector<Point> vs) {
    if (vs.size() < 3) throw DegenerateInput("polygon needs at least 3 vertices");
    for (const Point& p : vs) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw DegenerateInput("polygon vertex is not finite");
    }
    Polygon poly;
    poly.vertices = std::move(vs);
    const double eps = poly.epsilon();
    const std::size_t n = poly.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (distance(poly.vertices[i], poly.vertices[(i + 1) % n]) <= eps)
            throw DegenerateInput("consecutive polygon vertices coincide");
    }
    if (poly.signed_area() < 0.0)
        std::reverse(poly.vertices.begin(), poly.vertices.end());
    if (poly.signed_area() <= 0.0)
        throw DegenerateInput("polygon has no area");
    return poly;
}

double Polygon::signed_area() const {
    double acc = 0.0;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = vertices[i];
        const Point& q = vertices[(i + 1) % n];
        acc += cross(p, q);
    }
    return 0.5 * acc;
}

double Polygon::diameter() const {
    double best = 0.0;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            best = std::max(best, distance(vertices[i], vertices[j]));
    return best;
}

double Polygon::epsilon() const {
    double best = 0.0;
    for (const Point& p : vertices) best = std::max(best, std::max(std::fabs(p.x), std::fabs(p.y)));
    for (std::size_t i = 1; i < vertices.size(); ++i)
        best = std::max(best, distance(vertices[0], vertices[i]));
    return 1e-12 * std::max(1e-30, best);
}

bool Polygon::contains(Point p) const {
    const std::size_t n = vertices.size();
    const double eps = epsilon();
    bool inside = false;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point& a = vertices[j];
        const Point& b = vertices[i];
        // on-edge check
        const Point ab = b - a;
        const double len2 = dot(ab, ab);
        if (len2 > 0.0) {
            double t = dot(p - a, ab) / len2;
            t = std::clamp(t, 0.0, 1.0);
            const Point proj = a + t * ab;
            if (distance(p, proj) <= eps) return true;
        }
        if ((b.y > p.y) != (a.y > p.y)) {
            const double xint = b.x + (p.y - b.y) * (a.x - b.x) / (a.y - b.y);
            if (p.x < xint) inside = !inside;
        }
    }
    return inside;
}

namespace {

int orient(Point a, Point b, Point c, double eps) {
    const double v = cross(b - a, c - a);
    if (v > eps) return 1;
    if (v < -eps) return -1;
    return 0;
}

bool on_segment(Point a, Point b, Point p, double eps) {
    return orient(a, b, p, eps) == 0 &&
           p.x >= std::min(a.x, b.x) - eps && p.x <= std::max(a.x, b.x) + eps &&
           p.y >= std::min(a.y, b.y) - eps && p.y <= std::max(a.y, b.y) + eps;
}

bool segments_intersect(Point a, Point b, Point c, Point d, double eps) {
    const int o1 = orient(a, b, c, eps);
    const int o2 = orient(a, b, d, eps);
    const int o3 = orient(c, d, a, eps);
    const int o4 = orient(c, d, b, eps);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(a, b, c, eps)) return true;
    if (o2 == 0 && on_segment(a, b, d, eps)) return true;
    if (o3 == 0 && on_segment(c, d, a, eps)) return true;
    if (o4 == 0 && on_segment(c, d, b, eps)) return true;
    return false;
}

} // namespace

bool is_simple(const Polygon& poly) {
    const std::size_t n = poly.size();
    const double eps = poly.epsilon();
    for (std::size_t i = 0; i < n; ++i) {
        const auto [a, b] = poly.edge(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto [c, d] = poly.edge(j);
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) {
                // adjacent edges share exactly one endpoint; any other contact
                // means the boundary folds onto itself
                const Point shared = (j == i + 1) ? b : a;
                const Point tip_i = (j == i + 1) ? a : b;
                const Point tip_j = (j == i + 1) ? d : c;
                if (on_segment(c, d, tip_i, eps) && distance(tip_i, shared) > eps) return false;
                if (on_segment(a, b, tip_j, eps) && distance(tip_j, shared) > eps) return false;
                continue;
            }
            if (segments_intersect(a, b, c, d, eps)) return false;
        }
    }
    return true;
}

double kernel_margin(const Polygon& poly, Point s) {
    double margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto [p, q] = poly.edge(i);
        const double len = distance(p, q);
        margin = std::min(margin, cross(q - p, s - p) / len);
    }
    return margin;
}

bool in_kernel(const Polygon& poly, Point s) {
    return kernel_margin(poly, s) >= -poly.epsilon();
}

void require_kernel_interior(const Polygon& poly, Point s) {
    const double eps = poly.epsilon();
    const double margin = kernel_margin(poly, s);
    if (margin < -eps) throw NotInKernel("start point is outside the polygon kernel");
    if (margin < eps)
        throw DegenerateInput("start point lies on (or within tolerance of) the kernel boundary");
}

RadialProfile radial_profile(const Polygon& poly, Point s) {
    require_kernel_interior(poly, s);
    const std::size_t n = poly.size();
    RadialProfile profile;
    profile.center = s;
    profile.spans.reserve(n);
    profile.min_distance = std::numeric_limits<double>::infinity();
    profile.max_distance = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto [p, q] = poly.edge(i);
        const Point a = p - s;
        const Point b = q - s;
        const Point ev = b - a;
        const double len2 = dot(ev, ev);
        const double d = cross(a, b) / std::sqrt(len2);
        if (d <= 0.0) throw NotInKernel("edge not strictly visible from start point");
        const double t = -dot(a, ev) / len2;
        const Point foot = a + t * ev;
        RadialProfile::Span span;
        span.angle_lo = normalize_angle(std::atan2(a.y, a.x));
        span.line_distance = d;
        span.foot_angle = normalize_angle(std::atan2(foot.y, foot.x));
        span.edge = static_cast<int>(i);
        profile.spans.push_back(span);

        const double ra = norm(a);
        profile.max_distance = std::max(profile.max_distance, ra);
        profile.min_distance = std::min(profile.min_distance, ra);
        if (t > 0.0 && t < 1.0) profile.min_distance = std::min(profile.min_distance, d);
    }
    std::sort(profile.spans.begin(), profile.spans.end(),
              [](const RadialProfile::Span& a, const RadialProfile::Span& b) {
                  return a.angle_lo < b.angle_lo;
              });
    return profile;
}

const RadialProfile::Span& RadialProfile::span_at(double phi) const {
    const double a = normalize_angle(phi);
    auto it = std::upper_bound(spans.begin(), spans.end(), a,
                               [](double v, const Span& sp) { return v < sp.angle_lo; });
    if (it == spans.begin()) return spans.back();
    return *(it - 1);
}

double RadialProfile::operator()(double phi) const {
    const Span& sp = span_at(phi);
    const double c = std::cos(normalize_angle(phi) - sp.foot_angle);
    if (c <= 0.0) return std::numeric_limits<double>::infinity();
    return sp.line_distance / c;
}

std::vector<std::pair<double, double>> RadialProfile::breakpoints() const {
    std::vector<std::pair<double, double>> bps;
    bps.reserve(spans.size());
    for (const Span& sp : spans) {
        const double c = std::cos(sp.angle_lo - sp.foot_angle);
        bps.emplace_back(sp.angle_lo, sp.line_distance / c);
    }
    return bps;
}

CircleIntersections circle_boundary_hits(const Polygon& poly, Point s, double radius) {
    if (!(radius > 0.0)) throw DegenerateInput("circle radius must be positive");
    const std::size_t n = poly.size();
    const double eps = poly.epsilon();
    CircleIntersections out;
    out.radius = radius;
    std::vector<CircleIntersections::Hit> raw;
    for (std::size_t i = 0; i < n; ++i) {
        const auto [p, q] = poly.edge(i);
        const Point a = p - s;
        const Point dvec = q - p;
        const double A = dot(dvec, dvec);
        const double B = 2.0 * dot(a, dvec);
        const double C = dot(a, a) - radius * radius;
        const double disc = B * B - 4.0 * A * C;
        // tangency threshold in the same units as disc
        const double tang_tol = 4.0 * A * (2.0 * radius * eps);
        if (disc < -tang_tol) continue;
        if (disc <= tang_tol) {
            const double t = -B / (2.0 * A);
            if (t < -1e-12 || t > 1.0 + 1e-12) continue;
            const Point hitp = a + t * dvec;
            raw.push_back({normalize_angle(std::atan2(hitp.y, hitp.x)), true});
            continue;
        }
        const double sq = std::sqrt(disc);
        for (const double t : {(-B - sq) / (2.0 * A), (-B + sq) / (2.0 * A)}) {
            if (t < -1e-12 || t > 1.0 + 1e-12) continue;
            const Point hitp = a + t * dvec;
            raw.push_back({normalize_angle(std::atan2(hitp.y, hitp.x)), false});
        }
    }
    std::sort(raw.begin(), raw.end(),
              [](const CircleIntersections::Hit& x, const CircleIntersections::Hit& y) {
                  return x.angle < y.angle;
              });
    // merge duplicates (shared vertices, tangency refinements); keep the flag
    const double ang_tol = std::max(1e-13, eps / radius);
    for (const auto& h : raw) {
        if (!out.hits.empty() && std::fabs(h.angle - out.hits.back().angle) <= ang_tol) {
            out.hits.back().tangential = out.hits.back().tangential || h.tangential;
            continue;
        }
        out.hits.push_back(h);
    }
    // cyclic wrap duplicate
    if (out.hits.size() > 1 &&
        std::fabs(out.hits.front().angle + kTwoPi - out.hits.back().angle) <= ang_tol) {
        out.hits.front().tangential = out.hits.front().tangential || out.hits.back().tangential;
        out.hits.pop_back();
    }
    return out;
}

double max_inside_arc(const RadialProfile& profile, const CircleIntersections& hits) {
    const double x = hits.radius;
    if (hits.hits.empty()) {
        return x < profile(0.1234567890) ? kTwoPi : 0.0;
    }
    if (hits.hits.size() == 1) {
        // single (tangential) contact: the rest of the circle is one arc
        const double mid = normalize_angle(hits.hits.front().angle + kTwoPi / 2.0);
        return profile(mid) > x ? kTwoPi : 0.0;
    }
    double best = 0.0;
    const std::size_t m = hits.hits.size();
    for (std::size_t i = 0; i < m; ++i) {
        const double a = hits.hits[i].angle;
        const double b = hits.hits[(i + 1) % m].angle;
        const double gap = (i + 1 == m) ? ccw_delta(a, b) : (b - a);
        const double mid = normalize_angle(a + 0.5 * gap);
        if (profile(mid) > x) best = std::max(best, gap);
    }
    return std::min(best, kTwoPi);
}

double max_inside_arc(const Polygon& poly, Point s, double x) {
    const RadialProfile profile = radial_profile(poly, s);
    return max_inside_arc(profile, circle_boundary_hits(poly, s, x));
}

} // namespace escape
