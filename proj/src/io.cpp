#include "onetri/io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "onetri/error.hpp"

namespace onetri {
namespace {

std::vector<std::string> tokens_of(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(std::move(tok));
  return out;
}

Rational parse_token(const std::string& tok, std::size_t line) {
  try {
    return parse_rational(tok);
  } catch (const std::invalid_argument&) {
    throw ParseError(ParseErrorKind::malformed_literal, line, "malformed coordinate '" + tok + "'");
  }
}

std::string shortest(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) throw Error("cannot format floating-point value");
  return std::string(buf, end);
}

}  // namespace

PointConfig parse_points(std::istream& in) {
  std::vector<Point> points;
  std::map<std::vector<Rational>, std::size_t, std::less<>> seen;
  std::size_t arity = 0;
  std::size_t arity_line = 0;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto toks = tokens_of(line);
    if (toks.empty()) continue;
    std::vector<Rational> coords;
    coords.reserve(toks.size());
    for (const auto& tok : toks) coords.push_back(parse_token(tok, line_no));
    if (points.empty()) {
      arity = coords.size();
      arity_line = line_no;
    } else if (coords.size() != arity) {
      throw ParseError(ParseErrorKind::ragged_arity, line_no,
                       "expected " + std::to_string(arity) + " coordinates (as on line " +
                           std::to_string(arity_line) + "), got " + std::to_string(coords.size()));
    }
    auto [it, inserted] = seen.emplace(coords, line_no);
    if (!inserted) {
      throw ParseError(ParseErrorKind::duplicate_point, line_no,
                       "point repeats line " + std::to_string(it->second));
    }
    points.emplace_back(std::move(coords));
  }
  if (points.empty()) throw ParseError(ParseErrorKind::empty_input, line_no, "no points in input");
  return PointConfig(std::move(points));
}

PointConfig parse_point_file(const std::string& path) {
  if (path == "-") return parse_points(std::cin);
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  return parse_points(in);
}

SquaredDistanceMatrix parse_distance_matrix(std::istream& in) {
  std::vector<std::pair<std::string, std::size_t>> toks;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    for (auto& tok : tokens_of(line)) toks.emplace_back(std::move(tok), line_no);
  }
  if (toks.empty()) throw ParseError(ParseErrorKind::empty_input, line_no, "empty matrix input");

  const auto& [head, head_line] = toks.front();
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), n);
  if (ec != std::errc() || ptr != head.data() + head.size() || n == 0) {
    throw ParseError(ParseErrorKind::bad_header, head_line, "expected a positive point count, got '" + head + "'");
  }

  const std::size_t strict = n * (n - 1) / 2;
  const std::size_t with_diagonal = n * (n + 1) / 2;
  const std::size_t given = toks.size() - 1;
  if (given != strict && given != with_diagonal) {
    throw ParseError(ParseErrorKind::ragged_arity, toks.back().second,
                     "expected " + std::to_string(strict) + " upper-triangle entries for n = " +
                         std::to_string(n) + ", got " + std::to_string(given));
  }
  std::vector<Rational> upper;
  upper.reserve(strict);
  std::size_t k = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = given == strict ? i + 1 : i; j < n; ++j, ++k) {
      Rational value = parse_token(toks[k].first, toks[k].second);
      if (i == j) {
        if (sgn(value) != 0) {
          throw ParseError(ParseErrorKind::malformed_literal, toks[k].second, "diagonal entry must be 0");
        }
        continue;
      }
      upper.push_back(std::move(value));
    }
  }
  return SquaredDistanceMatrix::from_upper_triangle(n, upper);
}

std::string format_points(const PointConfig& cfg) {
  std::string out;
  for (const auto& p : cfg.points()) {
    for (std::size_t k = 0; k < p.dim(); ++k) {
      if (k) out += ' ';
      out += to_string(p[k]);
    }
    out += '\n';
  }
  return out;
}

std::string format_points(const Coordinates& points) {
  std::string out;
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    for (Eigen::Index k = 0; k < points.cols(); ++k) {
      if (k) out += ' ';
      out += shortest(points(i, k));
    }
    out += '\n';
  }
  return out;
}

std::string format_distance_matrix(const SquaredDistanceMatrix& d) {
  std::string out = std::to_string(d.size()) + "\n";
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::string row;
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (!row.empty()) row += ' ';
      row += to_string(d(i, j));
    }
    if (!row.empty()) out += row + "\n";
  }
  return out;
}

}  // namespace onetri
