#include "escape/oracle.hpp"

#include "escape/lowerbound.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace escape {
namespace oracle {

namespace {

double oracle_length(const Polygon& poly, const RadialProfile& profile, Point s, double x) {
    return x * (1.0 + max_inside_arc(profile, circle_boundary_hits(poly, s, x)));
}

} // namespace

CertificateResult certificate_oracle(const Polygon& poly, Point s, int x_samples,
                                     int angle_samples) {
    if (x_samples < 64 || angle_samples < 64)
        throw DomainError("certificate oracle needs at least 64 samples");
    const RadialProfile profile = radial_profile(poly, s);
    const double lo = profile.min_distance;
    const double hi = profile.max_distance;

    std::vector<double> xs(x_samples);
    std::vector<double> ls(x_samples);
    for (int i = 0; i < x_samples; ++i) {
        xs[i] = lo + (hi - lo) * i / (x_samples - 1);
        ls[i] = oracle_length(poly, profile, s, xs[i]);
    }
    double best_x = hi;
    double best_l = hi;
    for (int i = 0; i < x_samples; ++i) {
        if (ls[i] < best_l) {
            best_l = ls[i];
            best_x = xs[i];
        }
    }
    // refine around every local minimum of the grid
    constexpr double kInvPhi = 0.6180339887498948482;
    for (int i = 0; i < x_samples; ++i) {
        const bool left_ok = (i == 0) || ls[i] <= ls[i - 1];
        const bool right_ok = (i == x_samples - 1) || ls[i] <= ls[i + 1];
        if (!left_ok || !right_ok) continue;
        double a = xs[std::max(0, i - 1)];
        double b = xs[std::min(x_samples - 1, i + 1)];
        double c1 = b - kInvPhi * (b - a);
        double c2 = a + kInvPhi * (b - a);
        double f1 = oracle_length(poly, profile, s, c1);
        double f2 = oracle_length(poly, profile, s, c2);
        while (b - a > 1e-9 * std::max(1.0, b)) {
            if (f1 < f2) {
                b = c2; c2 = c1; f2 = f1;
                c1 = b - kInvPhi * (b - a);
                f1 = oracle_length(poly, profile, s, c1);
            } else {
                a = c1; c1 = c2; f1 = f2;
                c2 = a + kInvPhi * (b - a);
                f2 = oracle_length(poly, profile, s, c2);
            }
        }
        const double xm = 0.5 * (a + b);
        const double lm = oracle_length(poly, profile, s, xm);
        if (lm < best_l) {
            best_l = lm;
            best_x = xm;
        }
    }
    CertificateResult res;
    res.x_star = best_x;
    res.alpha_star = max_inside_arc(profile, circle_boundary_hits(poly, s, best_x));
    res.length = best_l;
    res.candidate_count = 0;
    res.witness_direction = 0.0;
    return res;
}

OracleReport cross_validate_certificate(const Polygon& poly, Point s, int x_samples,
                                        int angle_samples) {
    OracleReport rep;
    rep.x_samples = x_samples;
    rep.angle_samples = angle_samples;
    rep.exact_value = certificate(poly, s).length;
    rep.oracle_value = certificate_oracle(poly, s, x_samples, angle_samples).length;
    rep.abs_gap = std::fabs(rep.exact_value - rep.oracle_value);
    rep.rel_gap = rep.abs_gap / std::max(1e-300, rep.oracle_value);
    return rep;
}

OracleReport cross_validate_functionals(std::int64_t n, double a, int k) {
    if (k % n != 0) throw DomainError("k must be a multiple of n");
    const RaySystem sys = RaySystem::exponential(n, a, k);
    OracleReport rep;
    rep.x_samples = k;
    rep.oracle_value = functional_F1(sys, k) + functional_F2(sys, k);
    // closed form of the same finite sums
    const double step = kTwoPi / static_cast<double>(n);
    const double root = std::sqrt(1.0 - 2.0 * std::cos(step) * a + a * a);
    const double series = (std::pow(a, k) - a) / (a - 1.0);
    rep.exact_value = root * series *
                      (1.0 / (std::pow(a, k) * (1.0 + step)) +
                       1.0 / (std::pow(a, k - n + 1) * (1.0 + kTwoPi)));
    rep.abs_gap = std::fabs(rep.exact_value - rep.oracle_value);
    rep.rel_gap = rep.abs_gap / std::max(1e-300, std::fabs(rep.oracle_value));
    return rep;
}

bool in_kernel_sampling(const Polygon& poly, Point s, int boundary_samples) {
    // perimeter-uniform boundary samples, each checked for visibility
    const std::size_t n = poly.size();
    double perimeter = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto [a, b] = poly.edge(i);
        perimeter += distance(a, b);
    }
    const double eps = poly.epsilon();
    const double step = perimeter / boundary_samples;
    for (std::size_t i = 0; i < n; ++i) {
        const auto [a, b] = poly.edge(i);
        const double len = distance(a, b);
        const int m = std::max(1, static_cast<int>(len / step));
        for (int j = 0; j <= m; ++j) {
            const Point target = a + (static_cast<double>(j) / m) * (b - a);
            // the open segment s->target must not cross any edge properly
            for (std::size_t e = 0; e < n; ++e) {
                const auto [c, d] = poly.edge(e);
                const Point r = target - s;
                const Point t = d - c;
                const double den = cross(r, t);
                if (std::fabs(den) < 1e-300) continue;
                const double u = cross(c - s, t) / den;
                const double v = cross(c - s, r) / den;
                if (u > eps && u < 1.0 - eps && v > eps && v < 1.0 - eps) return false;
            }
        }
    }
    return true;
}

EscapeResult spiral_escape_polyline(const Polygon& poly, Point s, const SpiralParams& params,
                                    double step_degrees) {
    const RadialProfile profile = radial_profile(poly, s);
    const double cot_beta = 1.0 / std::tan(params.beta);
    const double step = step_degrees * kTwoPi / 360.0;
    double phi = std::log(profile.min_distance * (1.0 - 1e-9) / params.a) / cot_beta;
    const double phi_cap =
        std::log(profile.max_distance * (1.0 + 1e-6) / params.a) / cot_beta + kTwoPi;

    auto inside = [&](double ph) {
        const double r = params.a * std::exp(ph * cot_beta);
        return r < profile(ph + params.rotation);
    };
    if (!inside(phi)) throw NoExit("spiral polyline oracle started outside");
    while (phi < phi_cap) {
        const double next = phi + step;
        if (!inside(next)) {
            double lo = phi, hi = next;
            for (int it = 0; it < 90 && hi - lo > 1e-13; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (inside(mid)) lo = mid;
                else hi = mid;
            }
            EscapeResult res;
            res.exit_angle = hi;
            res.path_length = params.a / std::cos(params.beta) * std::exp(hi * cot_beta);
            const double r = params.a * std::exp(hi * cot_beta);
            const double w = hi + params.rotation;
            res.exit_point = profile.center + r * Point{std::cos(w), std::sin(w)};
            return res;
        }
        phi = next;
    }
    throw NoExit("spiral polyline oracle found no crossing");
}

Polygon random_star_polygon(std::uint64_t seed) { return random_star_polygon(seed, 6, 50); }

Polygon random_star_polygon(std::uint64_t seed, int min_vertices, int max_vertices) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> nv(min_vertices, max_vertices);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int n = nv(rng);
    std::vector<Point> vs;
    vs.reserve(n);
    for (int i = 0; i < n; ++i) {
        // jittered angles keep every gap below pi, so the origin stays in the kernel
        const double ang = kTwoPi * (i + 0.9 * unit(rng)) / n;
        const double rad = 0.2 + 0.8 * unit(rng);
        vs.push_back({rad * std::cos(ang), rad * std::sin(ang)});
    }
    return Polygon::from_vertices(std::move(vs));
}

} // namespace oracle
} // namespace escape
