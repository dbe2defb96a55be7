#include "escape/spiral.hpp"
#include "escape/certificate.hpp"
#include "escape/oracle.hpp"

#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

using namespace escape;
using namespace testsupport;

namespace {
constexpr double kPi = kTwoPi / 2.0;
constexpr double kRatioBound = 3.318674;

double boundary_distance(const Polygon& poly, Point p) {
    double best = 1e300;
    for (std::size_t e = 0; e < poly.size(); ++e) {
        const auto [a, b] = poly.edge(e);
        const Point t = b - a;
        double u = dot(p - a, t) / dot(t, t);
        u = std::clamp(u, 0.0, 1.0);
        best = std::min(best, distance(p, a + u * t));
    }
    return best;
}
}

TEST_CASE("optimal eccentricity and its ratio") {
    const double beta = optimal_beta();
    CHECK(beta == doctest::Approx(1.264714).epsilon(1e-6));
    CHECK(1.0 / std::cos(beta) == doctest::Approx(3.3186738).epsilon(1e-6));
    // defining balance: e^{2pi cot beta} = 1 + 2pi
    CHECK(std::exp(kTwoPi / std::tan(beta)) / (1.0 + kTwoPi) == doctest::Approx(1.0));
}

TEST_CASE("ratio function endpoints and interior") {
    const double beta = optimal_beta();
    CHECK(ratio_function(0.0, beta) == doctest::Approx(3.3186738).epsilon(1e-6));
    CHECK(ratio_function(kTwoPi, beta) == doctest::Approx(3.3186738).epsilon(1e-6));
    CHECK(std::fabs(ratio_function(0.0, beta) - ratio_function(kTwoPi, beta)) < 1e-9);
    CHECK(ratio_function(kPi, beta) < 3.3186738);
    double interior_max = 0.0;
    for (int i = 1; i < 10000; ++i)
        interior_max = std::max(interior_max, ratio_function(kTwoPi * i / 10000.0, beta));
    CHECK(interior_max < ratio_function(0.0, beta));
    CHECK_THROWS_AS(ratio_function(-0.1, beta), DomainError);
    CHECK_THROWS_AS(ratio_function(kTwoPi + 0.1, beta), DomainError);
}

TEST_CASE("escape from a near-disk stays within the guaranteed ratio") {
    const Polygon disk = regular_ngon(256);
    const Point c{0.0, 0.0};
    const double cert = certificate(disk, c).length;
    const RadialProfile profile = radial_profile(disk, c);
    for (int i = 0; i < 8; ++i) {
        const SpiralParams params = default_params(profile, optimal_beta(), kTwoPi * i / 8.0);
        const EscapeResult esc = escape(profile, params);
        CHECK(esc.path_length <= kRatioBound * cert);
        CHECK(boundary_distance(disk, esc.exit_point) <= 1e-9 * disk.diameter());
        CHECK(esc.path_length >= distance(c, esc.exit_point) - 1e-9);
    }
}

TEST_CASE("sector walk matches the dense polyline oracle") {
    for (std::uint64_t seed = 7; seed < 19; ++seed) {
        const Polygon poly = oracle::random_star_polygon(seed);
        const RadialProfile profile = radial_profile(poly, {0.0, 0.0});
        const SpiralParams params = default_params(profile, optimal_beta(), 1.234 + 0.1 * seed);
        const EscapeResult exact = escape(profile, params);
        const EscapeResult approx =
            oracle::spiral_escape_polyline(poly, {0.0, 0.0}, params, 0.05);
        CHECK(exact.path_length == doctest::Approx(approx.path_length).epsilon(1e-6));
    }
}

TEST_CASE("arc length consistency against numeric integration") {
    const double beta = optimal_beta();
    const double cot_beta = 1.0 / std::tan(beta);
    const double a = 0.013;
    const double phi0 = -4.0, phi1 = 5.0;
    // Simpson integration of the spiral speed r(phi)/sin(beta)
    const int n = 20000;
    double acc = 0.0;
    auto speed = [&](double ph) { return a * std::exp(ph * cot_beta) / std::sin(beta); };
    const double h = (phi1 - phi0) / n;
    for (int i = 0; i < n; ++i) {
        const double x0 = phi0 + i * h;
        acc += h / 6.0 * (speed(x0) + 4.0 * speed(x0 + h / 2.0) + speed(x0 + h));
    }
    const double closed = a / std::cos(beta) * (std::exp(phi1 * cot_beta) - std::exp(phi0 * cot_beta));
    CHECK(acc == doctest::Approx(closed).epsilon(1e-8));
}

TEST_CASE("escape length scales linearly with the instance") {
    const Polygon poly = oracle::random_star_polygon(33);
    const RadialProfile profile = radial_profile(poly, {0.0, 0.0});
    SpiralParams params = default_params(profile, optimal_beta(), 0.77);
    const double base = escape(profile, params).path_length;

    const double t = 7.5;
    std::vector<Point> scaled;
    for (Point p : poly.vertices) scaled.push_back({t * p.x, t * p.y});
    const Polygon big = Polygon::from_vertices(scaled);
    const RadialProfile big_profile = radial_profile(big, {0.0, 0.0});
    SpiralParams big_params = params;
    big_params.a = t * params.a;
    const double scaled_len = escape(big_profile, big_params).path_length;
    CHECK(scaled_len == doctest::Approx(t * base).epsilon(1e-12));
}

TEST_CASE("worst-case rotation search") {
    SUBCASE("rotation-invariant disk") {
        const Polygon disk = regular_ngon(180);
        const auto worst = worst_case_escape(disk, {0.0, 0.0}, optimal_beta(), 360);
        const RadialProfile profile = radial_profile(disk, {0.0, 0.0});
        const auto some = escape(profile, default_params(profile, optimal_beta(), 1.0));
        CHECK(worst.length == doctest::Approx(some.path_length).epsilon(1e-3));
    }
    SUBCASE("unit square stays within the bound") {
        const auto worst = worst_case_escape(unit_square_at_origin(), {0.0, 0.0},
                                             optimal_beta(), 360);
        const double cert = certificate(unit_square_at_origin(), {0.0, 0.0}).length;
        CHECK(worst.length / cert <= kRatioBound + 1e-6);
    }
    SUBCASE("random stars stay within the bound") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const Polygon poly = oracle::random_star_polygon(seed);
            const auto worst = worst_case_escape(poly, {0.0, 0.0}, optimal_beta(), 360);
            const double cert = certificate(poly, {0.0, 0.0}).length;
            CHECK(worst.length / cert <= kRatioBound + 1e-6);
        }
    }
}

TEST_CASE("escape rejects inconsistent parameters") {
    const Polygon disk = regular_ngon(64);
    const RadialProfile profile = radial_profile(disk, {0.0, 0.0});
    SpiralParams params = default_params(profile, optimal_beta(), 0.0);
    params.a = 2.0 * profile.min_distance;
    CHECK_THROWS_AS(escape(profile, params), DomainError);
    params = default_params(profile, 0.3, 0.0);
    CHECK_THROWS_AS(escape(profile, params), DomainError);
}
