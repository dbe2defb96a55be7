#include "escape/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <list>
#include <optional>

namespace escape {

namespace {

double safe_acos(double v) { return std::acos(std::clamp(v, -1.0, 1.0)); }

struct EdgeInfo {
    double d = 0.0;        // distance from s to the supporting line
    double psi = 0.0;      // direction of the foot of the perpendicular
    double theta0 = 0.0;   // direction of the edge's first vertex
    double theta1 = 0.0;   // direction of the edge's second vertex
    bool foot_on_segment = false;
};

struct Arc {
    int up = 0; // edge of the rising crossing
    int dn = 0; // edge of the falling crossing
    double base = 0.0; // alpha(x) = base - acos(d_up/x) - acos(d_dn/x)
    std::size_t cand_index = 0;
};

struct RawEvent {
    double radius = 0.0;
    int order = 0; // tangencies first among equal radii
    int kind = 0;  // 0 tan, 1 vmax, 2 vmin, 3 vinc, 4 vdec
    int index = 0; // edge for tan, vertex otherwise
};

class SweepRunner {
public:
    SweepRunner(const Polygon& poly, Point s) : poly_(poly), s_(s) {
        require_kernel_interior(poly, s);
        build_edges();
        build_events();
    }

    CandidateSweep run() {
        CandidateSweep out;
        out.min_distance = std::numeric_limits<double>::infinity();
        out.max_distance = 0.0;
        for (std::size_t v = 0; v < n_; ++v)
            out.max_distance = std::max(out.max_distance, vertex_radius_[v]);
        out.min_distance = events_.front().radius;

        for (const RawEvent& ev : events_) {
            if (out.candidates.empty()) {
                seed_initial(ev, out);
                continue;
            }
            switch (ev.kind) {
            case 0: handle_tangency(ev, out); break;
            case 1: handle_vertex_max(ev, out); break;
            case 2: handle_vertex_min(ev, out); break;
            case 3: handle_vertex_pass_up(ev, out); break;
            case 4: handle_vertex_pass_down(ev, out); break;
            default: break;
            }
        }
        if (!alive_.empty())
            throw GeometryError("certificate sweep left unfinished arcs (inconsistent geometry)");
        return out;
    }

private:
    const Polygon& poly_;
    Point s_;
    std::size_t n_ = 0;
    std::vector<EdgeInfo> edges_;
    std::vector<double> vertex_radius_;
    std::vector<double> vertex_theta_;
    std::vector<RawEvent> events_;
    std::list<Arc> alive_;

    int prev_edge(int v) const { return static_cast<int>((v + n_ - 1) % n_); }
    int next_edge(int v) const { return v; }

    void build_edges() {
        n_ = poly_.size();
        edges_.resize(n_);
        vertex_radius_.resize(n_);
        vertex_theta_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            const auto [p, q] = poly_.edge(i);
            const Point a = p - s_;
            const Point b = q - s_;
            const Point ev = b - a;
            const double len2 = dot(ev, ev);
            EdgeInfo info;
            info.d = cross(a, b) / std::sqrt(len2);
            const double t = -dot(a, ev) / len2;
            const Point foot = a + t * ev;
            info.psi = normalize_angle(std::atan2(foot.y, foot.x));
            info.theta0 = normalize_angle(std::atan2(a.y, a.x));
            info.theta1 = normalize_angle(std::atan2(b.y, b.x));
            info.foot_on_segment = (t > 0.0 && t < 1.0);
            edges_[i] = info;
            vertex_radius_[i] = norm(a);
            vertex_theta_[i] = info.theta0;
        }
    }

    void build_events() {
        for (std::size_t i = 0; i < n_; ++i) {
            if (edges_[i].foot_on_segment)
                events_.push_back({edges_[i].d, 0, 0, static_cast<int>(i)});
        }
        for (std::size_t v = 0; v < n_; ++v) {
            const double th = vertex_theta_[v];
            const EdgeInfo& before = edges_[prev_edge(static_cast<int>(v))];
            const EdgeInfo& after = edges_[next_edge(static_cast<int>(v))];
            const double sb = std::sin(th - before.psi);
            const double sa = std::sin(th - after.psi);
            const double tol = 1e-14;
            int kind;
            if (sb > tol && sa < -tol) kind = 1;        // local max
            else if (sb < -tol && sa > tol) kind = 2;   // local min
            else if (sb > tol && sa > tol) kind = 3;    // increasing pass
            else if (sb < -tol && sa < -tol) kind = 4;  // decreasing pass
            else {
                // a foot coincides with the vertex; classify by the other side
                if (sa < -tol) kind = 1;       // flat then falling: top
                else if (sa > tol) kind = 3;   // flat then rising
                else if (sb > tol) kind = 1;   // rising then flat: top
                else if (sb < -tol) kind = 4;  // falling then flat
                else kind = 1;
            }
            events_.push_back({vertex_radius_[v], 1, kind, static_cast<int>(v)});
        }
        std::sort(events_.begin(), events_.end(), [](const RawEvent& a, const RawEvent& b) {
            if (a.radius != b.radius) return a.radius < b.radius;
            if (a.order != b.order) return a.order < b.order;
            return a.index < b.index;
        });
        if (events_.empty()) throw GeometryError("no sweep events");
    }

    double phi_up(const Arc& arc, double x) const {
        const EdgeInfo& e = edges_[arc.up];
        return normalize_angle(e.psi + safe_acos(e.d / x));
    }
    double phi_dn(const Arc& arc, double x) const {
        const EdgeInfo& e = edges_[arc.dn];
        return normalize_angle(e.psi - safe_acos(e.d / x));
    }
    double measure(const Arc& arc, double x) const {
        return arc.base - safe_acos(edges_[arc.up].d / x) - safe_acos(edges_[arc.dn].d / x);
    }

    Arc make_arc(int up, int dn, double xb, bool full_circle, CandidateSweep& out) {
        const EdgeInfo& eu = edges_[up];
        const EdgeInfo& ed = edges_[dn];
        const double au = safe_acos(eu.d / xb);
        const double ad = safe_acos(ed.d / xb);
        Arc arc;
        arc.up = up;
        arc.dn = dn;
        if (full_circle) {
            arc.base = kTwoPi + au + ad;
        } else {
            const double gm = ccw_delta(normalize_angle(eu.psi + au), normalize_angle(ed.psi - ad));
            arc.base = gm + au + ad;
        }
        Candidate c;
        c.edge_i = up;
        c.edge_j = dn;
        c.d_i = eu.d;
        c.d_j = ed.d;
        c.psi_i = eu.psi;
        c.psi_j = ed.psi;
        c.angle_ij = kTwoPi / 2.0 - arc.base;
        c.sign_i = -1;
        c.sign_j = -1;
        c.x_lo = xb;
        c.x_hi = xb; // finalized when the arc dies
        arc.cand_index = out.candidates.size();
        out.candidates.push_back(c);
        return arc;
    }

    void kill(std::list<Arc>::iterator it, double radius, CandidateSweep& out) {
        out.candidates[it->cand_index].x_hi = radius;
        alive_.erase(it);
    }

    void seed_initial(const RawEvent& ev, CandidateSweep& out) {
        Arc arc;
        if (ev.kind == 0) {
            arc = make_arc(ev.index, ev.index, ev.radius, true, out);
            out.events.push_back({ev.radius, SweepEvent::Kind::vertex_or_tangent_birth, -1, ev.index});
        } else if (ev.kind == 2) {
            arc = make_arc(next_edge(ev.index), prev_edge(ev.index), ev.radius, true, out);
            out.events.push_back({ev.radius, SweepEvent::Kind::vertex_or_tangent_birth, ev.index, -1});
        } else {
            throw GeometryError("first sweep event is not a minimum of the radial distance");
        }
        alive_.push_back(arc);
    }

    std::list<Arc>::iterator find_containing(double direction, double radius) {
        auto best = alive_.end();
        double best_slack = -std::numeric_limits<double>::infinity();
        for (auto it = alive_.begin(); it != alive_.end(); ++it) {
            const double m = measure(*it, radius);
            const double a = ccw_delta(phi_up(*it, radius), direction);
            const double slack = m - a; // >= 0 when the direction lies in the arc
            if (slack >= 0.0) return it;
            if (slack > best_slack) {
                best_slack = slack;
                best = it;
            }
        }
        return best; // tolerance fallback: least violating arc
    }

    void split_arc(std::list<Arc>::iterator host, int dn_new, int up_new, double radius,
                   CandidateSweep& out) {
        const int up_old = host->up;
        const int dn_old = host->dn;
        kill(host, radius, out);
        alive_.push_back(make_arc(up_old, dn_new, radius, false, out));
        alive_.push_back(make_arc(up_new, dn_old, radius, false, out));
    }

    void handle_tangency(const RawEvent& ev, CandidateSweep& out) {
        auto host = find_containing(edges_[ev.index].psi, ev.radius);
        if (host == alive_.end()) throw GeometryError("tangency outside every alive arc");
        split_arc(host, ev.index, ev.index, ev.radius, out);
        out.events.push_back({ev.radius, SweepEvent::Kind::vertex_or_tangent_birth, -1, ev.index});
    }

    void handle_vertex_min(const RawEvent& ev, CandidateSweep& out) {
        auto host = find_containing(vertex_theta_[ev.index], ev.radius);
        if (host == alive_.end()) throw GeometryError("vertex minimum outside every alive arc");
        split_arc(host, prev_edge(ev.index), next_edge(ev.index), ev.radius, out);
        out.events.push_back({ev.radius, SweepEvent::Kind::vertex_or_tangent_birth, ev.index, -1});
    }

    void handle_vertex_max(const RawEvent& ev, CandidateSweep& out) {
        const int up_e = prev_edge(ev.index);
        const int dn_e = next_edge(ev.index);
        auto it = std::find_if(alive_.begin(), alive_.end(),
                               [&](const Arc& a) { return a.up == up_e && a.dn == dn_e; });
        if (it == alive_.end()) {
            // tolerance fallback: the arc of smallest measure around the vertex
            it = alive_.begin();
            for (auto j = alive_.begin(); j != alive_.end(); ++j)
                if (measure(*j, ev.radius) < measure(*it, ev.radius)) it = j;
            if (it == alive_.end()) throw GeometryError("vertex absorption with no alive arc");
        }
        kill(it, ev.radius, out);
        out.events.push_back({ev.radius, SweepEvent::Kind::vertex_absorbed, ev.index, -1});
    }

    void handle_vertex_pass_up(const RawEvent& ev, CandidateSweep& out) {
        const int up_e = prev_edge(ev.index);
        auto it = std::find_if(alive_.begin(), alive_.end(),
                               [&](const Arc& a) { return a.up == up_e; });
        if (it == alive_.end()) throw GeometryError("rising crossing transfer with no host arc");
        const int dn_keep = it->dn;
        kill(it, ev.radius, out);
        alive_.push_back(make_arc(next_edge(ev.index), dn_keep, ev.radius, false, out));
        out.events.push_back({ev.radius, SweepEvent::Kind::vertex_split, ev.index, -1});
    }

    void handle_vertex_pass_down(const RawEvent& ev, CandidateSweep& out) {
        const int dn_e = next_edge(ev.index);
        auto it = std::find_if(alive_.begin(), alive_.end(),
                               [&](const Arc& a) { return a.dn == dn_e; });
        if (it == alive_.end()) throw GeometryError("falling crossing transfer with no host arc");
        const int up_keep = it->up;
        kill(it, ev.radius, out);
        alive_.push_back(make_arc(up_keep, prev_edge(ev.index), ev.radius, false, out));
        out.events.push_back({ev.radius, SweepEvent::Kind::vertex_split, ev.index, -1});
    }
};

double raw_arc(const Candidate& c, double x) {
    const double base = kTwoPi / 2.0 - c.angle_ij;
    return base + c.sign_i * safe_acos(c.d_i / x) + c.sign_j * safe_acos(c.d_j / x);
}

} // namespace

CandidateSweep sweep_candidates(const Polygon& poly, Point s) {
    SweepRunner runner(poly, s);
    return runner.run();
}

std::vector<Candidate> enumerate_candidates(const Polygon& poly, Point s) {
    return sweep_candidates(poly, s).candidates;
}

double candidate_arc(const Candidate& c, double x) {
    const double tol = 1e-9 * std::max(1.0, c.x_hi);
    if (x < c.x_lo - tol || x > c.x_hi + tol)
        throw OutOfInterval("radius outside the candidate's existence interval");
    return std::clamp(raw_arc(c, x), 0.0, kTwoPi);
}

double envelope_arc(const CandidateSweep& sweep, double x) {
    const double tol = 1e-12 * std::max(1.0, sweep.max_distance);
    double best = -1.0;
    for (const Candidate& c : sweep.candidates) {
        if (!c.alive_at(x, tol)) continue;
        best = std::max(best, raw_arc(c, x));
    }
    if (best < 0.0) {
        if (x < sweep.min_distance) return kTwoPi;
        return 0.0;
    }
    return std::clamp(best, 0.0, kTwoPi);
}

namespace {

struct EnvelopeMinimizer {
    const CandidateSweep& sweep;
    double tol;

    int argmax_at(double x) const {
        int best = -1;
        double bestv = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < sweep.candidates.size(); ++i) {
            const Candidate& c = sweep.candidates[i];
            if (!c.alive_at(x, tol)) continue;
            const double v = raw_arc(c, x);
            if (v > bestv) {
                bestv = v;
                best = static_cast<int>(i);
            }
        }
        return best;
    }

    double length_at(double x) const { return x * (1.0 + envelope_arc(sweep, x)); }

    // golden-section minimum of the (smooth) envelope piece on [a, b]
    std::pair<double, double> golden(double a, double b) const {
        constexpr double kInvPhi = 0.6180339887498948482;
        double c1 = b - kInvPhi * (b - a);
        double c2 = a + kInvPhi * (b - a);
        double f1 = length_at(c1);
        double f2 = length_at(c2);
        while (b - a > 1e-10 * std::max(1.0, std::fabs(b))) {
            if (f1 < f2) {
                b = c2; c2 = c1; f2 = f1;
                c1 = b - kInvPhi * (b - a);
                f1 = length_at(c1);
            } else {
                a = c1; c1 = c2; f1 = f2;
                c2 = a + kInvPhi * (b - a);
                f2 = length_at(c2);
            }
        }
        const double xm = 0.5 * (a + b);
        return {xm, length_at(xm)};
    }
};

} // namespace

CertificateResult certificate(const Polygon&, Point, const CandidateSweep& sweep) {
    EnvelopeMinimizer env{sweep, 1e-12 * std::max(1.0, sweep.max_distance)};

    std::vector<double> bps;
    bps.reserve(2 * sweep.candidates.size() + 2);
    for (const Candidate& c : sweep.candidates) {
        bps.push_back(c.x_lo);
        bps.push_back(c.x_hi);
    }
    bps.push_back(sweep.min_distance);
    bps.push_back(sweep.max_distance);
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end(),
                          [&](double a, double b) { return b - a <= env.tol; }),
              bps.end());

    double best_x = sweep.max_distance;
    double best_len = sweep.max_distance; // alpha = 0 at the maximal distance
    auto consider = [&](double x, double len) {
        if (len < best_len) {
            best_len = len;
            best_x = x;
        }
    };
    for (double v : bps) consider(v, env.length_at(v));

    for (std::size_t k = 0; k + 1 < bps.size(); ++k) {
        const double a = bps[k];
        const double b = bps[k + 1];
        if (b - a <= env.tol) continue;
        // subdivide the cell wherever the argmax candidate changes
        constexpr int kProbes = 33;
        std::vector<double> seg{a};
        int prev = env.argmax_at(std::min(a + 0.25 * (b - a) / kProbes, b));
        double prev_x = a;
        for (int t = 1; t <= kProbes; ++t) {
            const double xt = a + (b - a) * t / kProbes;
            const int cur = env.argmax_at(std::min(xt, b - env.tol));
            if (cur != prev) {
                double lo = prev_x, hi = xt;
                for (int it = 0; it < 60 && hi - lo > env.tol; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    if (env.argmax_at(mid) == prev) lo = mid;
                    else hi = mid;
                }
                seg.push_back(0.5 * (lo + hi));
                prev = cur;
            }
            prev_x = xt;
        }
        seg.push_back(b);
        for (std::size_t t = 0; t + 1 < seg.size(); ++t) {
            const auto [xm, lm] = env.golden(seg[t], seg[t + 1]);
            consider(xm, lm);
        }
    }

    CertificateResult result;
    result.x_star = best_x;
    result.alpha_star = envelope_arc(sweep, best_x);
    result.length = best_x * (1.0 + result.alpha_star);
    result.candidate_count = static_cast<int>(sweep.candidates.size());
    const int wi = env.argmax_at(best_x);
    if (wi >= 0) {
        const Candidate& c = sweep.candidates[wi];
        const double up = normalize_angle(c.psi_i + safe_acos(c.d_i / best_x));
        result.witness_direction = normalize_angle(up + 0.5 * result.alpha_star);
    } else {
        result.witness_direction = 0.0;
    }
    return result;
}

CertificateResult certificate(const Polygon& poly, Point s) {
    return certificate(poly, s, sweep_candidates(poly, s));
}

} // namespace escape
