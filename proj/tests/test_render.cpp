#include "escape/render.hpp"
#include "escape/certificate.hpp"
#include "escape/spiral.hpp"

#include "support.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

using namespace escape;
using namespace testsupport;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing golden file: " << path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string golden(const std::string& name) {
    return std::string(TESTS_DIR) + "/golden/" + name;
}

} // namespace

TEST_CASE("polygon-only scene renders one closed outline") {
    Scene scene;
    scene.add(draw::PolygonOutline{unit_square_at_origin().vertices});
    const std::string svg = render_scene(scene);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("<polygon") != std::string::npos);
    CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
    // exactly one polygon element
    CHECK(svg.find("<polygon", svg.find("<polygon") + 1) == std::string::npos);
}

TEST_CASE("rendering is byte-deterministic") {
    const Polygon tri = equilateral_triangle();
    const auto cert = certificate(tri, triangle_centroid());
    const Scene scene = certificate_scene(tri, triangle_centroid(), cert);
    CHECK(render_scene(scene) == render_scene(scene));
    const auto profile = radial_profile(tri, triangle_centroid());
    CHECK(render_radial_profile(profile, &cert) == render_radial_profile(profile, &cert));
}

TEST_CASE("empty scenes are rejected") {
    Scene scene;
    CHECK_THROWS_AS(render_scene(scene), EmptyScene);
}

TEST_CASE("all emitted coordinates are finite and fit the viewbox") {
    const Polygon sq = unit_square_at_origin();
    const auto cert = certificate(sq, {0.1, -0.2});
    const std::string svg = render_scene(certificate_scene(sq, {0.1, -0.2}, cert));
    CHECK(svg.find("nan") == std::string::npos);
    CHECK(svg.find("inf") == std::string::npos);
}

TEST_CASE("golden: certificate scene in the unit square") {
    const Polygon sq = unit_square_at_origin();
    const auto cert = certificate(sq, {0.1, -0.2});
    const std::string svg = render_scene(certificate_scene(sq, {0.1, -0.2}, cert));
    CHECK(svg == read_file(golden("certificate_square.svg")));
}

TEST_CASE("golden: spiral scene in the unit square") {
    const std::string svg =
        render_scene(spiral_scene(unit_square_at_origin(), {0.0, 0.0}, optimal_beta(), 0.0));
    CHECK(svg == read_file(golden("spiral_square.svg")));
}

TEST_CASE("golden: radial profiles") {
    SUBCASE("square center scallops") {
        const auto profile = radial_profile(unit_square_at_origin(), {0.0, 0.0});
        CHECK(render_radial_profile(profile) == read_file(golden("profile_square.svg")));
    }
    SUBCASE("triangle near-edge valley") {
        const auto profile = radial_profile(equilateral_triangle(), {0.5, 0.05});
        CHECK(render_radial_profile(profile) == read_file(golden("profile_triangle_edge.svg")));
    }
    SUBCASE("near-disk flat line") {
        const auto profile = radial_profile(regular_ngon(96), {0.0, 0.0});
        CHECK(render_radial_profile(profile) == read_file(golden("profile_disk.svg")));
    }
}
