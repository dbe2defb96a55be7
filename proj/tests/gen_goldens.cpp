// Regenerates the golden SVG files (run manually from the repo root after an
// intentional rendering change).

#include "escape/certificate.hpp"
#include "escape/render.hpp"
#include "escape/spiral.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <vector>

using namespace escape;

namespace {

Polygon unit_square() {
    return Polygon::from_vertices({{-0.5, -0.5}, {0.5, -0.5}, {0.5, 0.5}, {-0.5, 0.5}});
}

Polygon ngon(int n) {
    std::vector<Point> vs;
    for (int i = 0; i < n; ++i) {
        const double a = kTwoPi * i / n;
        vs.push_back({std::cos(a), std::sin(a)});
    }
    return Polygon::from_vertices(vs);
}

void write(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    std::cout << path << " (" << content.size() << " bytes)\n";
}

} // namespace

int main(int argc, char** argv) {
    const std::string dir = argc > 1 ? argv[1] : "tests/golden";
    {
        const Polygon sq = unit_square();
        const auto cert = certificate(sq, {0.1, -0.2});
        write(dir + "/certificate_square.svg",
              render_scene(certificate_scene(sq, {0.1, -0.2}, cert)));
    }
    write(dir + "/spiral_square.svg",
          render_scene(spiral_scene(unit_square(), {0.0, 0.0}, optimal_beta(), 0.0)));
    {
        const auto profile = radial_profile(unit_square(), {0.0, 0.0});
        write(dir + "/profile_square.svg", render_radial_profile(profile));
    }
    {
        const Polygon tri =
            Polygon::from_vertices({{0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}});
        const auto profile = radial_profile(tri, {0.5, 0.05});
        write(dir + "/profile_triangle_edge.svg", render_radial_profile(profile));
    }
    {
        const auto profile = radial_profile(ngon(96), {0.0, 0.0});
        write(dir + "/profile_disk.svg", render_radial_profile(profile));
    }
    return 0;
}
