#include "escape/render.hpp"

#include "escape/spiral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace escape {

namespace {

std::string fmt(double v) {
    char buf[64];
    if (std::fabs(v) < 5e-7) v = 0.0; // avoid "-0.000000"
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

struct Box {
    double xlo = std::numeric_limits<double>::infinity();
    double ylo = std::numeric_limits<double>::infinity();
    double xhi = -std::numeric_limits<double>::infinity();
    double yhi = -std::numeric_limits<double>::infinity();
    void grow(Point p) {
        xlo = std::min(xlo, p.x);
        ylo = std::min(ylo, p.y);
        xhi = std::max(xhi, p.x);
        yhi = std::max(yhi, p.y);
    }
};

void grow_box(Box& box, const draw::Drawable& d) {
    if (const auto* p = std::get_if<draw::PolygonOutline>(&d)) {
        for (Point v : p->vertices) box.grow(v);
    } else if (const auto* p = std::get_if<draw::Polyline>(&d)) {
        for (Point v : p->points) box.grow(v);
    } else if (const auto* p = std::get_if<draw::CircularArc>(&d)) {
        const int steps = std::max(2, static_cast<int>(std::ceil(std::fabs(p->sweep) / 0.05)));
        for (int i = 0; i <= steps; ++i) {
            const double a = p->start_angle + p->sweep * i / steps;
            box.grow(p->center + p->radius * Point{std::cos(a), std::sin(a)});
        }
    } else if (const auto* p = std::get_if<draw::Marker>(&d)) {
        box.grow(p->at);
    } else if (const auto* p = std::get_if<draw::Label>(&d)) {
        box.grow(p->at);
    }
}

void emit_points(std::string& out, const std::vector<Point>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out += ' ';
        out += fmt(pts[i].x);
        out += ',';
        out += fmt(-pts[i].y); // y grows downward in SVG
    }
}

void emit(std::string& out, const draw::Drawable& d, double stroke_w) {
    if (const auto* p = std::get_if<draw::PolygonOutline>(&d)) {
        out += "<polygon fill=\"none\" stroke=\"" + p->stroke + "\" stroke-width=\"" +
               fmt(stroke_w) + "\" points=\"";
        emit_points(out, p->vertices);
        out += "\"/>\n";
    } else if (const auto* p = std::get_if<draw::Polyline>(&d)) {
        out += "<polyline fill=\"none\" stroke=\"" + p->stroke + "\" stroke-width=\"" +
               fmt(stroke_w) + "\" points=\"";
        emit_points(out, p->points);
        out += "\"/>\n";
    } else if (const auto* p = std::get_if<draw::CircularArc>(&d)) {
        const double a0 = p->start_angle;
        const double a1 = p->start_angle + p->sweep;
        const Point from = p->center + p->radius * Point{std::cos(a0), std::sin(a0)};
        const Point to = p->center + p->radius * Point{std::cos(a1), std::sin(a1)};
        const bool large = std::fabs(p->sweep) > kTwoPi / 2.0;
        // SVG sweeps clockwise in screen coordinates when flag=0; our ccw
        // arcs in math coordinates map to flag 0 after the y flip
        const int sweep_flag = p->sweep > 0 ? 0 : 1;
        if (std::fabs(p->sweep) >= kTwoPi - 1e-9) {
            out += "<circle fill=\"none\" stroke=\"" + p->stroke + "\" stroke-width=\"" +
                   fmt(stroke_w) + "\" cx=\"" + fmt(p->center.x) + "\" cy=\"" +
                   fmt(-p->center.y) + "\" r=\"" + fmt(p->radius) + "\"/>\n";
            return;
        }
        out += "<path fill=\"none\" stroke=\"" + p->stroke + "\" stroke-width=\"" +
               fmt(stroke_w) + "\" d=\"M " + fmt(from.x) + ' ' + fmt(-from.y) + " A " +
               fmt(p->radius) + ' ' + fmt(p->radius) + " 0 " + (large ? '1' : '0') + ' ' +
               char('0' + sweep_flag) + ' ' + fmt(to.x) + ' ' + fmt(-to.y) + "\"/>\n";
    } else if (const auto* p = std::get_if<draw::Marker>(&d)) {
        out += "<circle fill=\"" + p->fill + "\" cx=\"" + fmt(p->at.x) + "\" cy=\"" +
               fmt(-p->at.y) + "\" r=\"" + fmt(stroke_w * 2.5) + "\"/>\n";
    } else if (const auto* p = std::get_if<draw::Label>(&d)) {
        out += "<text x=\"" + fmt(p->at.x) + "\" y=\"" + fmt(-p->at.y) +
               "\" font-size=\"" + fmt(stroke_w * 12.0) + "\" font-family=\"monospace\">" +
               p->text + "</text>\n";
    }
}

} // namespace

std::string render_scene(const Scene& scene) {
    if (scene.layers.empty()) throw EmptyScene("scene has no drawables");
    Box box;
    for (const auto& d : scene.layers) grow_box(box, d);
    if (!(box.xhi >= box.xlo)) throw EmptyScene("scene has no finite extent");
    const double w = std::max(box.xhi - box.xlo, 1e-9);
    const double h = std::max(box.yhi - box.ylo, 1e-9);
    const double margin = 0.05 * std::max(w, h);
    const double stroke_w = 0.004 * std::max(w, h);

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"";
    out += fmt(box.xlo - margin) + ' ' + fmt(-box.yhi - margin) + ' ' + fmt(w + 2 * margin) +
           ' ' + fmt(h + 2 * margin);
    out += "\">\n";
    for (const auto& d : scene.layers) emit(out, d, stroke_w);
    out += "</svg>\n";
    return out;
}

std::string render_radial_profile(const RadialProfile& profile, const CertificateResult* cert) {
    Scene scene;
    // axes
    const double fmax = profile.max_distance;
    scene.add(draw::Polyline{{{0.0, 0.0}, {kTwoPi, 0.0}}, "#888888"});
    scene.add(draw::Polyline{{{0.0, 0.0}, {0.0, fmax * 1.05}}, "#888888"});
    // f(phi) over [0, 2pi]: dense grid plus the exact breakpoint angles
    draw::Polyline curve;
    curve.stroke = "#0057b7";
    std::vector<double> phis;
    for (const auto& sp : profile.spans) phis.push_back(sp.angle_lo);
    constexpr int kDense = 720;
    for (int i = 0; i <= kDense; ++i) phis.push_back(kTwoPi * i / kDense);
    std::sort(phis.begin(), phis.end());
    phis.erase(std::unique(phis.begin(), phis.end(),
                           [](double a, double b) { return b - a < 1e-12; }),
               phis.end());
    for (double phi : phis) curve.points.push_back({phi, profile(phi)});
    scene.add(curve);
    if (cert) {
        // the certificate hook: vertical radius stem, horizontal arc reach
        const double phi0 = cert->witness_direction - 0.5 * cert->alpha_star;
        draw::Polyline hook;
        hook.stroke = "#c43c00";
        hook.points = {{normalize_angle(phi0), 0.0},
                       {normalize_angle(phi0), cert->x_star},
                       {normalize_angle(phi0) + cert->alpha_star, cert->x_star}};
        scene.add(hook);
    }
    return render_scene(scene);
}

Scene certificate_scene(const Polygon& poly, Point s, const CertificateResult& cert) {
    Scene scene;
    scene.add(draw::PolygonOutline{poly.vertices});
    scene.add(draw::Marker{s});
    const double phi0 = cert.witness_direction - 0.5 * cert.alpha_star;
    const Point reach = s + cert.x_star * Point{std::cos(phi0), std::sin(phi0)};
    scene.add(draw::Polyline{{s, reach}, "#c43c00"});
    if (cert.alpha_star > 1e-12)
        scene.add(draw::CircularArc{s, cert.x_star, phi0, cert.alpha_star});
    return scene;
}

Scene spiral_scene(const Polygon& poly, Point s, double beta, double rotation) {
    Scene scene;
    scene.add(draw::PolygonOutline{poly.vertices});
    scene.add(draw::Marker{s});
    const RadialProfile profile = radial_profile(poly, s);
    SpiralParams params = default_params(profile, beta, rotation);
    const EscapeResult esc = escape(profile, params);
    const double cot_beta = 1.0 / std::tan(beta);
    draw::Polyline pl;
    pl.stroke = "#0057b7";
    const double phi_from = std::log(1e-3 * profile.min_distance / params.a) / cot_beta;
    const double step = 0.5 * kTwoPi / 360.0; // 0.5 degree sampling
    for (double phi = phi_from; phi < esc.exit_angle; phi += step) {
        const double r = params.a * std::exp(phi * cot_beta);
        const double w = phi + params.rotation;
        pl.points.push_back(s + r * Point{std::cos(w), std::sin(w)});
    }
    pl.points.push_back(esc.exit_point);
    scene.add(pl);
    scene.add(draw::Marker{esc.exit_point, "#c43c00"});
    return scene;
}

} // namespace escape
