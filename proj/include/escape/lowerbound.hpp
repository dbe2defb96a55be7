#pragma once

#include "escape/spiral.hpp" // DomainError

#include <cstdint>
#include <vector>

namespace escape {

class IndexError : public GeometryError {
public:
    explicit IndexError(const std::string& what) : GeometryError(what) {}
};

/// n equidistant rays from the start with a periodic visiting strategy:
/// depth x_i is visited on ray i mod n.
struct RaySystem {
    std::int64_t n = 3;
    std::vector<double> strategy;

    static RaySystem exponential(std::int64_t n, double a, int k);
};

struct LowerBoundResult {
    std::int64_t n = 0;
    double a_star = 0.0;
    double g_value = 0.0;
    double bound = 0.0; // g_value / 2
};

/// Chain-over-last-depth ratio: sum of adjacent-ray hop lengths over the
/// narrow certificate x_k (1 + 2pi/n). Defined for 1 <= k <= strategy size.
double functional_F1(const RaySystem& system, int k);

/// Same chain over the wide certificate x_{k-n+1} (1 + 2pi); needs k >= n.
double functional_F2(const RaySystem& system, int k);

/// Closed form of the limiting F1 + F2 for the exponential strategy x_i = a^i.
double g(std::int64_t n, double a);

/// Numerically stable evaluation with eps = a - 1 given directly.
double g_from_eps(std::int64_t n, double eps);

/// Minimize g over a in (1, 1 + 64*2pi/n]; bound = g/2.
LowerBoundResult minimize_g(std::int64_t n);

/// One visit of a finite search sequence: a ray index and a depth.
struct RayVisit {
    int ray = 0;
    double depth = 0.0;
};

/// Periodic-monotone rearrangement of a visit sequence: depths sorted
/// ascending and laid out on consecutive rays.
struct RearrangementCheck {
    double original_chain = 0.0; // start leg + adjacent-ray hop chain, original order
    double sorted_chain = 0.0;   // start leg + hop chain after sorting
    double original_last_round_min = 0.0; // min over rays of the last visit depth
    double sorted_last_round_min = 0.0;   // x_{k-n+1} after sorting
    double max_depth = 0.0;               // unchanged by sorting
    bool shorter = false;                 // sorted_chain <= original_chain
    bool denominators_kept = false;       // certificate denominators did not shrink
};

RearrangementCheck check_rearrangement(int n, const std::vector<RayVisit>& visits);

} // namespace escape
