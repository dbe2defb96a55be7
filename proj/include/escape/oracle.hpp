#pragma once

#include "escape/certificate.hpp"
#include "escape/geometry.hpp"
#include "escape/spiral.hpp"

#include <cstdint>
#include <vector>

namespace escape {
namespace oracle {

struct OracleReport {
    double exact_value = 0.0;
    double oracle_value = 0.0;
    double abs_gap = 0.0;
    double rel_gap = 0.0;
    int x_samples = 0;
    int angle_samples = 0;
};

/// Brute-force certificate: grid-minimize x*(1 + max_inside_arc) over
/// [d_min, d_max] and refine around every grid-local minimum. Shares no code
/// with the candidate sweep.
CertificateResult certificate_oracle(const Polygon& poly, Point s, int x_samples,
                                     int angle_samples);

/// certificate() vs certificate_oracle() on one instance.
OracleReport cross_validate_certificate(const Polygon& poly, Point s, int x_samples,
                                        int angle_samples);

/// Directly summed F1+F2 for x_i = a^i vs the closed form at the same k.
OracleReport cross_validate_functionals(std::int64_t n, double a, int k);

/// Visibility-based kernel test: 'boundary_samples' points on the boundary
/// are checked for an unobstructed segment to s.
bool in_kernel_sampling(const Polygon& poly, Point s, int boundary_samples);

/// Spiral escape by dense polyline marching (independent of the sector walk).
EscapeResult spiral_escape_polyline(const Polygon& poly, Point s, const SpiralParams& params,
                                    double step_degrees);

/// Random star-shaped polygon with the origin in its kernel: jittered sorted
/// angles, radii in [0.2, 1.0].
Polygon random_star_polygon(std::uint64_t seed);
Polygon random_star_polygon(std::uint64_t seed, int min_vertices, int max_vertices);

} // namespace oracle
} // namespace escape
