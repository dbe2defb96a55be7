#include "escape/polygon_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace escape {

namespace {

bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        return true;
    }
    return false;
}

} // namespace

Polygon load_polygon(std::istream& in) {
    std::string line;
    if (!next_data_line(in, line)) throw ParseError("empty polygon file");
    std::istringstream head(line);
    long n = 0;
    if (!(head >> n) || n < 3) throw ParseError("invalid vertex count: " + line);
    std::vector<Point> vs;
    vs.reserve(n);
    for (long i = 0; i < n; ++i) {
        if (!next_data_line(in, line))
            throw ParseError("expected " + std::to_string(n) + " vertices, got " +
                             std::to_string(i));
        std::istringstream row(line);
        Point p;
        if (!(row >> p.x >> p.y) || !std::isfinite(p.x) || !std::isfinite(p.y))
            throw ParseError("invalid vertex line: " + line);
        vs.push_back(p);
    }
    return Polygon::from_vertices(std::move(vs));
}

Polygon load_polygon_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open polygon file: " + path);
    return load_polygon(in);
}

void save_polygon_file(const Polygon& poly, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write polygon file: " + path);
    out << poly.size() << "\n";
    out.precision(17);
    for (const Point& p : poly.vertices) out << p.x << " " << p.y << "\n";
    if (!out) throw ParseError("failed writing polygon file: " + path);
}

Point parse_point(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw ParseError("expected X,Y but got: " + text);
    try {
        std::size_t used = 0;
        Point p;
        p.x = std::stod(text.substr(0, comma), &used);
        p.y = std::stod(text.substr(comma + 1), &used);
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw ParseError("non-finite point");
        return p;
    } catch (const std::exception&) {
        throw ParseError("expected X,Y but got: " + text);
    }
}

} // namespace escape
