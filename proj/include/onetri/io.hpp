#pragma once

#include <istream>
#include <string>

#include "onetri/geometry.hpp"

namespace onetri {

/// Point-set text: one point per line, whitespace-separated `p/q` or decimal
/// coordinates, `#` comments and blank lines ignored, equal arity throughout.
/// Throws ParseError carrying the offending line number.
PointConfig parse_points(std::istream& in);

/// Reads a point file; `-` means standard input.
PointConfig parse_point_file(const std::string& path);

/// Matrix text: first token n, then the strict upper triangle row by row
/// (n(n-1)/2 values); the upper triangle including the zero diagonal is also accepted.
SquaredDistanceMatrix parse_distance_matrix(std::istream& in);

std::string format_points(const PointConfig& cfg);

/// Shortest round-trip decimal per coordinate, so the output parses back exactly
/// to the same doubles.
std::string format_points(const Coordinates& points);

std::string format_distance_matrix(const SquaredDistanceMatrix& d);

}  // namespace onetri
