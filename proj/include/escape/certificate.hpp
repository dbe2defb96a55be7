#pragma once

#include "escape/geometry.hpp"

#include <vector>

namespace escape {

class OutOfInterval : public GeometryError {
public:
    explicit OutOfInterval(const std::string& what) : GeometryError(what) {}
};

/// One segment-pair arc-length function with its existence interval.
/// The arc runs counter-clockwise from its up-crossing on edge_i to its
/// down-crossing on edge_j and evaluates to
///   alpha(x) = pi - angle_ij + sign_i*acos(d_i/x) + sign_j*acos(d_j/x).
struct Candidate {
    int edge_i = 0; // edge carrying the arc's start (crossing on the rising branch)
    int edge_j = 0; // edge carrying the arc's end (crossing on the falling branch)
    double d_i = 0.0;
    double d_j = 0.0;
    double psi_i = 0.0; // foot-of-perpendicular direction of edge_i's line
    double psi_j = 0.0;
    double angle_ij = 0.0;
    int sign_i = -1;
    int sign_j = -1;
    double x_lo = 0.0;
    double x_hi = 0.0;

    bool alive_at(double x, double tol) const { return x >= x_lo - tol && x <= x_hi + tol; }
};

struct SweepEvent {
    enum class Kind {
        vertex_absorbed,      // arc over a locally farthest vertex degenerates (type 1)
        vertex_split,         // crossing transfers across a pass-through vertex (type 2)
        vertex_or_tangent_birth // local minimum: an arc splits in two (type 3)
    };
    double radius = 0.0;
    Kind kind = Kind::vertex_absorbed;
    int vertex = -1; // involved vertex, -1 for pure tangencies
    int edge = -1;   // involved edge, -1 for pure vertex events
};

struct CertificateResult {
    double x_star = 0.0;
    double alpha_star = 0.0;
    double length = 0.0;
    double witness_direction = 0.0; // angular midpoint of the worst-case arc
    int candidate_count = 0;
};

/// Result of the expanding-circle sweep: every maximal inside arc the circle
/// family ever realizes, as arc-length functions of the radius.
struct CandidateSweep {
    std::vector<Candidate> candidates;
    std::vector<SweepEvent> events;
    double min_distance = 0.0; // min of the radial distance function
    double max_distance = 0.0; // max of the radial distance function
};

CandidateSweep sweep_candidates(const Polygon& poly, Point s);
std::vector<Candidate> enumerate_candidates(const Polygon& poly, Point s);

/// alpha(x) for one candidate; throws OutOfInterval outside [x_lo, x_hi].
double candidate_arc(const Candidate& c, double x);

/// max over alive candidates of candidate_arc (the maximal inside arc), with
/// the conventions 2pi below the minimum distance and 0 above the maximum.
double envelope_arc(const CandidateSweep& sweep, double x);

/// Shortest certificate path, min over x of x*(1 + alpha_s(x)).
CertificateResult certificate(const Polygon& poly, Point s);
CertificateResult certificate(const Polygon& poly, Point s, const CandidateSweep& sweep);

} // namespace escape
