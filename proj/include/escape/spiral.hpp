#pragma once

#include "escape/geometry.hpp"

namespace escape {

class DomainError : public GeometryError {
public:
    explicit DomainError(const std::string& what) : GeometryError(what) {}
};

class NoExit : public GeometryError {
public:
    explicit NoExit(const std::string& what) : GeometryError(what) {}
};

/// Logarithmic spiral r(phi) = a * e^{phi * cot(beta)}, rotated by `rotation`.
struct SpiralParams {
    double a = 1.0;        // scale constant, must start inside the environment
    double beta = 0.0;     // eccentricity in (pi/4, pi/2)
    double rotation = 0.0; // adversary rotation offset in [0, 2pi)
};

struct EscapeResult {
    double exit_angle = 0.0;  // spiral parameter phi at the first boundary crossing
    double path_length = 0.0; // (a / cos beta) * e^{phi cot beta}
    Point exit_point;
};

/// Eccentricity balancing the two extreme certificate arcs:
/// arccot(ln(1+2pi)/(2pi)) = 1.264714...
double optimal_beta();

/// Ratio e^{gamma cot beta} / (cos beta * (1 + gamma)) for gamma in [0, 2pi].
double ratio_function(double gamma, double beta);

/// First boundary crossing of the spiral started at s inside the kernel.
EscapeResult escape(const Polygon& poly, Point s, const SpiralParams& params);
EscapeResult escape(const RadialProfile& profile, const SpiralParams& params);

/// Adversary search: grid over rotations plus local refinement.
struct WorstRotation {
    double rotation = 0.0;
    double length = 0.0;
};
WorstRotation worst_case_escape(const Polygon& poly, Point s, double beta, int rotation_samples);

/// Spiral parameters with the default scale a = 1e-3 * d_min for this start.
SpiralParams default_params(const RadialProfile& profile, double beta, double rotation);

} // namespace escape
