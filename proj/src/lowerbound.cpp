#include "escape/lowerbound.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace escape {

namespace {

/// Kahan-compensated accumulator for the long hop sums.
struct CompensatedSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double v) {
        const double y = v - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

double hop(double u, double v, double cos_step) {
    return std::sqrt(std::max(0.0, u * u - 2.0 * cos_step * u * v + v * v));
}

double chain_sum(const std::vector<double>& xs, int k, double cos_step) {
    CompensatedSum acc;
    for (int i = 0; i + 1 < k; ++i) acc.add(hop(xs[i], xs[i + 1], cos_step));
    return acc.sum;
}

} // namespace

RaySystem RaySystem::exponential(std::int64_t n, double a, int k) {
    if (a <= 1.0) throw DomainError("exponential strategy needs a > 1");
    RaySystem sys;
    sys.n = n;
    sys.strategy.resize(k);
    double v = 1.0;
    for (int i = 0; i < k; ++i) {
        v *= a;
        sys.strategy[i] = v; // x_i = a^i, 1-based i
    }
    return sys;
}

double functional_F1(const RaySystem& system, int k) {
    if (k < 1 || k > static_cast<int>(system.strategy.size()))
        throw IndexError("functional index k outside the strategy");
    const double step = kTwoPi / static_cast<double>(system.n);
    const double numer = chain_sum(system.strategy, k, std::cos(step));
    return numer / (system.strategy[k - 1] * (1.0 + step));
}

double functional_F2(const RaySystem& system, int k) {
    if (k < static_cast<int>(system.n) || k > static_cast<int>(system.strategy.size()))
        throw IndexError("functional_F2 needs n <= k <= strategy size");
    const double step = kTwoPi / static_cast<double>(system.n);
    const double numer = chain_sum(system.strategy, k, std::cos(step));
    return numer / (system.strategy[k - system.n] * (1.0 + kTwoPi));
}

double g_from_eps(std::int64_t n, double eps) {
    if (!(eps > 0.0)) throw DomainError("g is defined for a > 1");
    if (n < 3) throw DomainError("g needs at least 3 rays");
    const double step = kTwoPi / static_cast<double>(n);
    // cancellation-safe sqrt(1 - 2 cos(step) a + a^2) = sqrt(eps^2 + 4 a sin^2(step/2))
    const double s = std::sin(0.5 * step);
    const double root = std::sqrt(eps * eps + 4.0 * (1.0 + eps) * s * s);
    // geometric series limit of the hop chain: a^{n-1} carries the wide term
    const double apow = std::exp(static_cast<double>(n - 1) * std::log1p(eps));
    return root / eps * (1.0 / (1.0 + step) + apow / (1.0 + kTwoPi));
}

double g(std::int64_t n, double a) {
    return g_from_eps(n, a - 1.0);
}

LowerBoundResult minimize_g(std::int64_t n) {
    if (n < 3) throw DomainError("minimize_g needs at least 3 rays");
    const double step = kTwoPi / static_cast<double>(n);
    // a - 1 scales like 1/n at the optimum; search c = (a-1)/step over (0, 64]
    auto value = [&](double c) { return g_from_eps(n, c * step); };
    constexpr double kInvPhi = 0.6180339887498948482;
    double lo = 1e-9, hi = 64.0;
    double c1 = hi - kInvPhi * (hi - lo);
    double c2 = lo + kInvPhi * (hi - lo);
    double f1 = value(c1);
    double f2 = value(c2);
    while (hi - lo > 1e-14 * hi) {
        if (f1 < f2) {
            hi = c2; c2 = c1; f2 = f1;
            c1 = hi - kInvPhi * (hi - lo);
            f1 = value(c1);
        } else {
            lo = c1; c1 = c2; f1 = f2;
            c2 = lo + kInvPhi * (hi - lo);
            f2 = value(c2);
        }
    }
    const double c = 0.5 * (lo + hi);
    LowerBoundResult res;
    res.n = n;
    res.a_star = 1.0 + c * step;
    res.g_value = value(c);
    res.bound = 0.5 * res.g_value;
    return res;
}

RearrangementCheck check_rearrangement(int n, const std::vector<RayVisit>& visits) {
    if (n < 3) throw DomainError("rearrangement check needs at least 3 rays");
    if (visits.empty()) throw DomainError("rearrangement check needs at least one visit");
    const int k = static_cast<int>(visits.size());
    const double cos_step = std::cos(kTwoPi / n);

    // Both chains are charged from the start point and all hops are counted
    // at the adjacent-ray angle (the neighbouring-ray short cut).
    RearrangementCheck out;
    CompensatedSum orig;
    orig.add(visits.front().depth);
    for (int i = 0; i + 1 < k; ++i) orig.add(hop(visits[i].depth, visits[i + 1].depth, cos_step));
    out.original_chain = orig.sum;

    std::vector<double> sorted(k);
    for (int i = 0; i < k; ++i) sorted[i] = visits[i].depth;
    std::sort(sorted.begin(), sorted.end());
    CompensatedSum srt;
    srt.add(sorted.front());
    for (int i = 0; i + 1 < k; ++i) srt.add(hop(sorted[i], sorted[i + 1], cos_step));
    out.sorted_chain = srt.sum;

    // last visit per ray in the original sequence
    std::vector<double> last(n, -1.0);
    double maxdepth = 0.0;
    for (const RayVisit& v : visits) {
        if (v.ray < 0 || v.ray >= n) throw IndexError("visit on a nonexistent ray");
        last[v.ray] = v.depth;
        maxdepth = std::max(maxdepth, v.depth);
    }
    double last_min = std::numeric_limits<double>::infinity();
    for (double d : last)
        if (d >= 0.0) last_min = std::min(last_min, d);
    out.original_last_round_min = last_min;
    out.sorted_last_round_min = (k >= n) ? sorted[k - n] : sorted.front();
    out.max_depth = maxdepth;

    out.shorter = out.sorted_chain <= out.original_chain * (1.0 + 1e-12) + 1e-12;
    out.denominators_kept = out.sorted_last_round_min >= out.original_last_round_min - 1e-12 &&
                            sorted.back() >= maxdepth - 1e-12;
    return out;
}

} // namespace escape
