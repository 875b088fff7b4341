#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "onetri/rational.hpp"

namespace onetri {

/// Floating-point configuration: one point per row.
using Coordinates = Eigen::MatrixXd;

/// A point of R^d with exact rational coordinates.
class Point {
 public:
  explicit Point(std::vector<Rational> coords);

  std::size_t dim() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Rational> coords() const noexcept { return coords_; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<Rational> coords_;
};

/// Ordered set of pairwise distinct points sharing one ambient dimension.
class PointConfig {
 public:
  explicit PointConfig(std::vector<Point> points);

  std::size_t size() const noexcept { return points_.size(); }
  std::size_t ambient_dim() const noexcept { return dim_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const noexcept { return points_; }

 private:
  std::vector<Point> points_;
  std::size_t dim_;
};

/// Symmetric matrix of squared pairwise distances: zero diagonal, positive elsewhere.
class SquaredDistanceMatrix {
 public:
  /// `entries` is row-major n*n; validated on construction.
  SquaredDistanceMatrix(std::size_t n, std::vector<Rational> entries);

  /// Builds from the strict upper triangle listed row by row.
  static SquaredDistanceMatrix from_upper_triangle(std::size_t n, std::span<const Rational> upper);

  std::size_t size() const noexcept { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  friend bool operator==(const SquaredDistanceMatrix&, const SquaredDistanceMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<Rational> entries_;
};

enum class TriangleKind { equilateral, isosceles, scalene };

const char* to_string(TriangleKind kind) noexcept;

/// Sorted squared side lengths a <= b <= c of one triangle; equal signatures
/// mean congruent triangles (side-side-side).
template <class Scalar>
struct BasicTriangleSignature {
  Scalar a;
  Scalar b;
  Scalar c;

  friend bool operator==(const BasicTriangleSignature& x, const BasicTriangleSignature& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c;
  }
  friend bool operator<(const BasicTriangleSignature& x, const BasicTriangleSignature& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return x.c < y.c;
  }
};

using TriangleSignature = BasicTriangleSignature<Rational>;
using ApproxTriangleSignature = BasicTriangleSignature<double>;

TriangleKind classify(const TriangleSignature& sig);

template <class Scalar>
struct TriangleClass {
  BasicTriangleSignature<Scalar> signature;
  TriangleKind kind;
  std::size_t multiplicity;
};

/// The distinct triangles T(P) of a configuration together with its distance spectrum.
template <class Scalar>
struct BasicCensusReport {
  std::size_t n_points = 0;
  std::vector<Scalar> distinct_distances;  // sorted squared values
  std::vector<TriangleClass<Scalar>> triangle_classes;  // sorted by signature
  std::size_t degenerate_triples = 0;

  std::size_t distinct_distance_count() const noexcept { return distinct_distances.size(); }
  std::size_t class_count() const noexcept { return triangle_classes.size(); }
};

using CensusReport = BasicCensusReport<Rational>;
using ApproxCensusReport = BasicCensusReport<double>;

Rational squared_distance(const Point& p, const Point& q);

SquaredDistanceMatrix distance_matrix(const PointConfig& cfg);

/// Sixteen times the squared area of a triangle with squared sides a, b, c.
template <class Scalar>
Scalar sixteen_area_squared(const Scalar& a, const Scalar& b, const Scalar& c) {
  return Scalar(2 * a * b + 2 * b * c + 2 * c * a - a * a - b * b - c * c);
}

bool is_degenerate_triple(const Rational& a, const Rational& b, const Rational& c);

/// Throws DegenerateTriangle for collinear triples.
TriangleSignature triangle_signature(const Rational& a, const Rational& b, const Rational& c);

/// Iterates all C(n,3) triples. Requires n >= 3.
CensusReport census(const PointConfig& cfg);

/// R^2 = abc / (16 Area^2) in squared-length units.
Rational squared_circumradius(const TriangleSignature& sig);

/// Tolerance-based census for floating-point input; `eps` is relative to the
/// largest squared pairwise distance.
ApproxCensusReport epsilon_census(const Coordinates& points, double eps);

Coordinates to_coordinates(const PointConfig& cfg);

}  // namespace onetri
