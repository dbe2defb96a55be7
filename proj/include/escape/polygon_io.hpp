#pragma once

#include "escape/geometry.hpp"

#include <iosfwd>
#include <string>

namespace escape {

class ParseError : public GeometryError {
public:
    explicit ParseError(const std::string& what) : GeometryError(what) {}
};

/// Line-oriented polygon text: first non-comment line is the vertex count n,
/// then n lines "x y". Lines starting with '#' are comments.
Polygon load_polygon(std::istream& in);
Polygon load_polygon_file(const std::string& path);
void save_polygon_file(const Polygon& poly, const std::string& path);

/// "X,Y" -> Point
Point parse_point(const std::string& text);

} // namespace escape
