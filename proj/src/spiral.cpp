#include "escape/spiral.hpp"

#include <algorithm>
#include <cmath>

namespace escape {

namespace {

constexpr double kPi = kTwoPi / 2.0;

double spiral_radius(const SpiralParams& p, double phi) {
    return p.a * std::exp(phi / std::tan(p.beta));
}

} // namespace

double optimal_beta() {
    return std::atan(kTwoPi / std::log1p(kTwoPi));
}

double ratio_function(double gamma, double beta) {
    if (gamma < -1e-12 || gamma > kTwoPi + 1e-12)
        throw DomainError("ratio_function argument outside [0, 2pi]");
    gamma = std::clamp(gamma, 0.0, kTwoPi);
    return std::exp(gamma / std::tan(beta)) / (std::cos(beta) * (1.0 + gamma));
}

SpiralParams default_params(const RadialProfile& profile, double beta, double rotation) {
    SpiralParams p;
    p.a = 1e-3 * profile.min_distance;
    p.beta = beta;
    p.rotation = normalize_angle(rotation);
    return p;
}

EscapeResult escape(const RadialProfile& profile, const SpiralParams& params) {
    if (!(params.beta > kPi / 4.0 && params.beta < kPi / 2.0))
        throw DomainError("spiral eccentricity must lie in (pi/4, pi/2)");
    if (!(params.a > 0.0) || params.a > profile.min_distance)
        throw DomainError("spiral scale must be positive and start inside the environment");
    const double cot_beta = 1.0 / std::tan(params.beta);

    // The spiral cannot cross the boundary while its radius stays below the
    // minimum distance, so marching starts there.
    const double phi_start = std::log(profile.min_distance * (1.0 - 1e-9) / params.a) / cot_beta;
    const double phi_cap = std::log(profile.max_distance * (1.0 + 1e-9) / params.a) / cot_beta;

    // Walk the angular sectors of the profile in order. Within a sector the
    // inside margin G(phi) = phi*cot(beta) + ln(a/d) + ln cos(phi + rot - psi)
    // is concave in phi, so the first root cannot be missed.
    const std::size_t nspans = profile.spans.size();
    auto span_index_at = [&](double world) {
        const RadialProfile::Span& sp = profile.span_at(world);
        for (std::size_t k = 0; k < nspans; ++k)
            if (&profile.spans[k] == &sp) return k;
        return std::size_t{0};
    };

    double phi = phi_start;
    const double world0 = normalize_angle(phi + params.rotation);
    std::size_t k = span_index_at(world0);

    auto g_margin = [&](double ph, const RadialProfile::Span& sp) {
        const double w = ph + params.rotation;
        return ph * cot_beta + std::log(params.a / sp.line_distance) +
               std::log(std::cos(w - sp.foot_angle)); // cos > 0 inside the sector
    };

    auto make_result = [&](double ph) {
        EscapeResult r;
        r.exit_angle = ph;
        r.path_length = params.a / std::cos(params.beta) * std::exp(ph * cot_beta);
        const double rad = spiral_radius(params, ph);
        const double w = ph + params.rotation;
        r.exit_point = profile.center + rad * Point{std::cos(w), std::sin(w)};
        return r;
    };

    while (phi <= phi_cap + kTwoPi) {
        const RadialProfile::Span& sp = profile.spans[k];
        const std::size_t k_next = (k + 1) % nspans;
        // sector end in spiral parameter
        const double world = phi + params.rotation;
        const double dw = ccw_delta(normalize_angle(world), profile.spans[k_next].angle_lo);
        if (dw <= 1e-14) { // sitting on the seam; the next sector owns this angle
            k = k_next;
            continue;
        }
        const double phi_end = phi + dw;

        double lo = phi, hi = phi_end;
        double g_lo = g_margin(lo, sp);
        if (g_lo >= 0.0) return make_result(lo);
        double g_hi = g_margin(hi, sp);
        bool bracket = g_hi >= 0.0;
        if (!bracket) {
            // concave margin: check the interior maximum for a grazing pair
            const double base = sp.foot_angle - params.rotation + std::atan(cot_beta);
            double phi_peak = base + kTwoPi * std::floor((0.5 * (lo + hi) - base) / kTwoPi + 0.5);
            if (phi_peak > lo && phi_peak < hi && g_margin(phi_peak, sp) >= 0.0) {
                hi = phi_peak;
                bracket = true;
            }
        }
        if (bracket) {
            for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (g_margin(mid, sp) < 0.0) lo = mid;
                else hi = mid;
            }
            return make_result(hi);
        }
        phi = phi_end;
        k = k_next;
    }
    throw NoExit("spiral failed to cross the boundary (geometry inconsistency)");
}

EscapeResult escape(const Polygon& poly, Point s, const SpiralParams& params) {
    return escape(radial_profile(poly, s), params);
}

WorstRotation worst_case_escape(const Polygon& poly, Point s, double beta, int rotation_samples) {
    if (rotation_samples < 360) throw DomainError("need at least 360 rotation samples");
    const RadialProfile profile = radial_profile(poly, s);
    SpiralParams params = default_params(profile, beta, 0.0);

    auto length_at = [&](double rot) {
        params.rotation = normalize_angle(rot);
        return escape(profile, params).path_length;
    };

    WorstRotation best{0.0, -1.0};
    const double step0 = kTwoPi / rotation_samples;
    for (int i = 0; i < rotation_samples; ++i) {
        const double rot = i * step0;
        const double len = length_at(rot);
        if (len > best.length) best = {rot, len};
    }
    // local refinement on progressively finer grids (the length is only
    // piecewise smooth in the rotation, so plain section search is unsafe)
    double half = step0;
    for (int round = 0; round < 4 && half > 1e-7; ++round) {
        const double center = best.rotation;
        constexpr int kLocal = 25;
        for (int i = -kLocal; i <= kLocal; ++i) {
            const double rot = center + half * i / kLocal;
            const double len = length_at(rot);
            if (len > best.length) best = {normalize_angle(rot), len};
        }
        half /= kLocal;
    }
    return best;
}

} // namespace escape
