#include "escape/baselines.hpp"
#include "escape/certificate.hpp"
#include "escape/geometry.hpp"
#include "escape/lowerbound.hpp"
#include "escape/oracle.hpp"
#include "escape/polygon_io.hpp"
#include "escape/render.hpp"
#include "escape/spiral.hpp"

#include <CLI11.hpp>

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

namespace {

constexpr int kExitBadInput = 2;
constexpr int kExitIoFailure = 3;

void write_file_or_throw(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open output file: " + path);
    out << content;
    if (!out) throw std::ios_base::failure("failed writing: " + path);
}

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

int run_certificate(const std::string& polygon_path, const std::string& start_text,
                    bool with_oracle, const std::string& svg_path) {
    const escape::Polygon poly = escape::load_polygon_file(polygon_path);
    const escape::Point s = escape::parse_point(start_text);
    const escape::CertificateResult cert = escape::certificate(poly, s);
    std::string svg;
    if (!svg_path.empty()) svg = render_scene(escape::certificate_scene(poly, s, cert));
    std::cout << num(cert.x_star) << " " << num(cert.alpha_star) << " " << num(cert.length)
              << "\n";
    if (with_oracle) {
        const auto rep = escape::oracle::cross_validate_certificate(poly, s, 1024, 1024);
        std::cout << "oracle " << num(rep.oracle_value) << " rel_gap " << num(rep.rel_gap)
                  << "\n";
    }
    if (!svg_path.empty()) write_file_or_throw(svg_path, svg);
    return 0;
}

int run_spiral(const std::string& polygon_path, const std::string& start_text, int rotations,
               const std::string& svg_path) {
    const escape::Polygon poly = escape::load_polygon_file(polygon_path);
    const escape::Point s = escape::parse_point(start_text);
    const double beta = escape::optimal_beta();
    const auto worst = escape::worst_case_escape(poly, s, beta, rotations);
    const auto cert = escape::certificate(poly, s);
    std::string svg;
    if (!svg_path.empty())
        svg = render_scene(escape::spiral_scene(poly, s, beta, worst.rotation));
    std::cout << num(worst.rotation) << " " << num(worst.length) << " " << num(cert.length)
              << " " << num(worst.length / cert.length) << "\n";
    if (!svg_path.empty()) write_file_or_throw(svg_path, svg);
    return 0;
}

int run_lowerbound(std::int64_t n, const std::vector<std::int64_t>& sweep) {
    std::vector<std::int64_t> ns = sweep;
    if (ns.empty()) ns.push_back(n);
    for (std::int64_t v : ns) {
        const escape::LowerBoundResult res = escape::minimize_g(v);
        std::printf("%" PRId64 " %.12g %.9g %.9g\n", res.n, res.a_star, res.g_value, res.bound);
    }
    return 0;
}

int run_baselines(const std::string& which, int samples, const std::string& report_path) {
    std::string csv;
    if (which == "triangle") {
        const auto rows = escape::triangle_dominance(samples);
        csv = "start_x,start_y,baseline_worst,certificate,ratio,dominated\n";
        bool all = true;
        for (const auto& r : rows) {
            csv += num(r.start.x) + "," + num(r.start.y) + "," + num(r.baseline_worst) + "," +
                   num(r.certificate_length) + "," +
                   num(r.baseline_worst / r.certificate_length) + "," +
                   (r.dominated ? "1" : "0") + "\n";
            all = all && r.dominated;
        }
        std::cout << rows.size() << " samples, dominated=" << (all ? "all" : "NOT ALL") << "\n";
        if (!all) return 1;
    } else if (which == "strip") {
        const auto rows = escape::strip_dominance(samples);
        csv = "d,baseline_worst,certificate,ratio,dominated\n";
        bool all = true;
        for (const auto& r : rows) {
            csv += num(r.d) + "," + num(r.rotated_exit_length) + "," +
                   num(r.certificate_length) + "," +
                   num(r.rotated_exit_length / r.certificate_length) + "," +
                   (r.dominated ? "1" : "0") + "\n";
            all = all && r.dominated;
        }
        std::cout << rows.size() << " samples, dominated=" << (all ? "all" : "NOT ALL") << "\n";
        if (!all) return 1;
    } else { // disk
        const int nv = 256;
        std::vector<escape::Point> vs;
        for (int i = 0; i < nv; ++i) {
            const double a = escape::kTwoPi * i / nv;
            vs.push_back({std::cos(a), std::sin(a)});
        }
        const auto disk = escape::Polygon::from_vertices(vs);
        csv = "start_x,start_y,baseline_worst,certificate,ratio,dominated\n";
        bool all = true;
        for (int i = 0; i < samples; ++i) {
            const double r = 0.9 * i / samples;
            const escape::Point s{r, 0.0};
            const auto profile = escape::radial_profile(disk, s);
            const double diameter_worst = profile.max_distance;
            const double cert = escape::certificate(disk, s).length;
            const bool dom = cert <= diameter_worst + 1e-9;
            csv += num(s.x) + "," + num(s.y) + "," + num(diameter_worst) + "," + num(cert) +
                   "," + num(diameter_worst / cert) + "," + (dom ? "1" : "0") + "\n";
            all = all && dom;
        }
        std::cout << samples << " samples, dominated=" << (all ? "all" : "NOT ALL") << "\n";
        if (!all) return 1;
    }
    if (!report_path.empty()) write_file_or_throw(report_path, csv);
    return 0;
}

int run_render(const std::string& polygon_path, const std::string& start_text,
               const std::string& svg_path) {
    const escape::Polygon poly = escape::load_polygon_file(polygon_path);
    const escape::Point s = escape::parse_point(start_text);
    const auto profile = escape::radial_profile(poly, s);
    const auto cert = escape::certificate(poly, s);
    const std::string svg = escape::render_radial_profile(profile, &cert);
    write_file_or_throw(svg_path, svg);
    std::cout << svg_path << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"escape-path analysis for star-shaped polygons"};
    app.require_subcommand(1);

    std::string polygon_path, start_text, svg_path, report_path, case_name = "triangle";
    bool with_oracle = false;
    int rotations = 720;
    int samples = 100;
    std::int64_t n = 28000000000LL;
    std::vector<std::int64_t> sweep;

    auto* cert = app.add_subcommand("certificate", "optimal certificate path");
    cert->add_option("--polygon", polygon_path)->required();
    cert->add_option("--start", start_text)->required();
    cert->add_flag("--oracle", with_oracle);
    cert->add_option("--svg", svg_path);

    auto* spiral = app.add_subcommand("spiral", "worst-case spiral escape vs certificate");
    spiral->add_option("--polygon", polygon_path)->required();
    spiral->add_option("--start", start_text)->required();
    spiral->add_option("--rotations", rotations);
    spiral->add_option("--svg", svg_path);

    auto* lb = app.add_subcommand("lowerbound", "competitive lower bound");
    lb->add_option("--n", n);
    lb->add_option("--sweep", sweep)->delimiter(',');

    auto* base = app.add_subcommand("baselines", "known ultimate escape paths vs certificate");
    base->add_option("--case", case_name)->check(CLI::IsMember({"triangle", "strip", "disk"}));
    base->add_option("--samples", samples);
    base->add_option("--report", report_path);

    auto* rend = app.add_subcommand("render", "radial distance profile with certificate hook");
    rend->add_option("--polygon", polygon_path)->required();
    rend->add_option("--start", start_text)->required();
    rend->add_option("--svg", svg_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cert->parsed()) return run_certificate(polygon_path, start_text, with_oracle, svg_path);
        if (spiral->parsed()) return run_spiral(polygon_path, start_text, rotations, svg_path);
        if (lb->parsed()) return run_lowerbound(n, sweep);
        if (base->parsed()) return run_baselines(case_name, samples, report_path);
        if (rend->parsed()) return run_render(polygon_path, start_text, svg_path);
    } catch (const std::ios_base::failure& ex) {
        std::cerr << "io error: " << ex.what() << "\n";
        return kExitIoFailure;
    } catch (const escape::GeometryError& ex) {
        std::cerr << "invalid input: " << ex.what() << "\n";
        return kExitBadInput;
    }
    return 0;
}
