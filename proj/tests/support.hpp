#pragma once

#include "escape/geometry.hpp"

#include <cmath>
#include <vector>

namespace testsupport {

inline escape::Polygon unit_square_at_origin() {
    return escape::Polygon::from_vertices(
        {{-0.5, -0.5}, {0.5, -0.5}, {0.5, 0.5}, {-0.5, 0.5}});
}

inline escape::Polygon square_side(double half) {
    return escape::Polygon::from_vertices(
        {{-half, -half}, {half, -half}, {half, half}, {-half, half}});
}

inline escape::Polygon regular_ngon(int n, double radius = 1.0) {
    std::vector<escape::Point> vs;
    vs.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double a = escape::kTwoPi * i / n;
        vs.push_back({radius * std::cos(a), radius * std::sin(a)});
    }
    return escape::Polygon::from_vertices(vs);
}

inline escape::Polygon equilateral_triangle() {
    return escape::Polygon::from_vertices({{0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}});
}

inline escape::Point triangle_centroid() {
    return {0.5, std::sqrt(3.0) / 6.0};
}

inline escape::Polygon strip_rectangle(double length = 20.0, double width = 1.0) {
    return escape::Polygon::from_vertices(
        {{-length / 2.0, 0.0}, {length / 2.0, 0.0}, {length / 2.0, width}, {-length / 2.0, width}});
}

inline escape::Polygon l_shape() {
    return escape::Polygon::from_vertices(
        {{0.0, 0.0}, {2.0, 0.0}, {2.0, 1.0}, {1.0, 1.0}, {1.0, 2.0}, {0.0, 2.0}});
}

} // namespace testsupport
