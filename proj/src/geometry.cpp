#include "onetri/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "onetri/error.hpp"

namespace onetri {

Point::Point(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw PreconditionError("point must have at least one coordinate");
}

PointConfig::PointConfig(std::vector<Point> points) : points_(std::move(points)), dim_(0) {
  if (points_.empty()) throw PreconditionError("configuration must contain at least one point");
  dim_ = points_.front().dim();
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].dim() != dim_) {
      throw DimensionMismatch("point " + std::to_string(i) + " has dimension " +
                              std::to_string(points_[i].dim()) + ", expected " +
                              std::to_string(dim_));
    }
  }
  std::vector<std::size_t> order(points_.size());
  std::iota(order.begin(), order.end(), 0);
  auto coord_less = [&](std::size_t i, std::size_t j) {
    return std::lexicographical_compare(points_[i].coords().begin(), points_[i].coords().end(),
                                        points_[j].coords().begin(), points_[j].coords().end());
  };
  std::sort(order.begin(), order.end(), coord_less);
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (points_[order[k - 1]] == points_[order[k]]) {
      auto [i, j] = std::minmax(order[k - 1], order[k]);
      throw PreconditionError("points " + std::to_string(i) + " and " + std::to_string(j) +
                              " coincide");
    }
  }
}

SquaredDistanceMatrix::SquaredDistanceMatrix(std::size_t n, std::vector<Rational> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ == 0) throw PreconditionError("distance matrix must have at least one point");
  if (entries_.size() != n_ * n_) throw PreconditionError("distance matrix entry count mismatch");
  for (std::size_t i = 0; i < n_; ++i) {
    if (sgn((*this)(i, i)) != 0) throw PreconditionError("distance matrix diagonal must be zero");
    for (std::size_t j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) {
        throw PreconditionError("distance matrix is not symmetric");
      }
      if (sgn((*this)(i, j)) <= 0) {
        throw PreconditionError("off-diagonal squared distances must be positive");
      }
    }
  }
}

SquaredDistanceMatrix SquaredDistanceMatrix::from_upper_triangle(std::size_t n,
                                                                 std::span<const Rational> upper) {
  if (upper.size() != n * (n - 1) / 2) {
    throw PreconditionError("expected " + std::to_string(n * (n - 1) / 2) +
                            " upper-triangle entries, got " + std::to_string(upper.size()));
  }
  std::vector<Rational> entries(n * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++k) {
      entries[i * n + j] = upper[k];
      entries[j * n + i] = upper[k];
    }
  }
  return SquaredDistanceMatrix(n, std::move(entries));
}

const char* to_string(TriangleKind kind) noexcept {
  switch (kind) {
    case TriangleKind::equilateral: return "equilateral";
    case TriangleKind::isosceles: return "isosceles";
    case TriangleKind::scalene: return "scalene";
  }
  return "unknown";
}

TriangleKind classify(const TriangleSignature& sig) {
  if (sig.a == sig.c) return TriangleKind::equilateral;
  if (sig.a == sig.b || sig.b == sig.c) return TriangleKind::isosceles;
  return TriangleKind::scalene;
}

Rational squared_distance(const Point& p, const Point& q) {
  if (p.dim() != q.dim()) {
    throw DimensionMismatch("points have dimensions " + std::to_string(p.dim()) + " and " +
                            std::to_string(q.dim()));
  }
  Rational sum = 0;
  Rational diff;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    diff = p[i] - q[i];
    sum += diff * diff;
  }
  return sum;
}

SquaredDistanceMatrix distance_matrix(const PointConfig& cfg) {
  const std::size_t n = cfg.size();
  std::vector<Rational> entries(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      entries[i * n + j] = squared_distance(cfg[i], cfg[j]);
      entries[j * n + i] = entries[i * n + j];
    }
  }
  return SquaredDistanceMatrix(n, std::move(entries));
}

bool is_degenerate_triple(const Rational& a, const Rational& b, const Rational& c) {
  return sgn(sixteen_area_squared(a, b, c)) <= 0;
}

TriangleSignature triangle_signature(const Rational& a, const Rational& b, const Rational& c) {
  if (is_degenerate_triple(a, b, c)) {
    throw DegenerateTriangle("squared sides (" + a.get_str() + ", " + b.get_str() + ", " +
                             c.get_str() + ") describe a collinear triple");
  }
  std::array<Rational, 3> s{a, b, c};
  std::sort(s.begin(), s.end());
  return {s[0], s[1], s[2]};
}

CensusReport census(const PointConfig& cfg) {
  const std::size_t n = cfg.size();
  if (n < 3) throw PreconditionError("census needs at least 3 points, got " + std::to_string(n));
  const SquaredDistanceMatrix d = distance_matrix(cfg);

  std::set<Rational> distances;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) distances.insert(d(i, j));
  }

  std::map<TriangleSignature, std::size_t> classes;
  CensusReport report;
  report.n_points = n;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Rational& a = d(i, j);
        const Rational& b = d(i, k);
        const Rational& c = d(j, k);
        if (is_degenerate_triple(a, b, c)) {
          ++report.degenerate_triples;
          continue;
        }
        ++classes[triangle_signature(a, b, c)];
      }
    }
  }

  report.distinct_distances.assign(distances.begin(), distances.end());
  for (const auto& [sig, count] : classes) {
    report.triangle_classes.push_back({sig, classify(sig), count});
  }
  return report;
}

Rational squared_circumradius(const TriangleSignature& sig) {
  const Rational area16 = sixteen_area_squared(sig.a, sig.b, sig.c);
  if (sgn(area16) <= 0) throw DegenerateTriangle("circumradius of a degenerate triangle");
  return Rational(sig.a * sig.b * sig.c / area16);
}

Coordinates to_coordinates(const PointConfig& cfg) {
  Coordinates out(static_cast<Eigen::Index>(cfg.size()), static_cast<Eigen::Index>(cfg.ambient_dim()));
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    for (std::size_t k = 0; k < cfg.ambient_dim(); ++k) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = to_double(cfg[i][k]);
    }
  }
  return out;
}

namespace {

// Single-linkage clusters over values already sorted lexicographically;
// returns the cluster id of every element, ids numbered in processing order.
// `beyond(x, y)` must be monotone in y along the sorted order.
template <class T, class Near, class Beyond>
std::vector<std::size_t> single_linkage(const std::vector<T>& sorted, Near near, Beyond beyond) {
  const std::size_t m = sorted.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m && !beyond(sorted[i], sorted[j]); ++j) {
      if (near(sorted[i], sorted[j])) {
        std::size_t ri = find(i), rj = find(j);
        if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
      }
    }
  }
  std::vector<std::size_t> ids(m);
  std::map<std::size_t, std::size_t> renumber;
  for (std::size_t i = 0; i < m; ++i) {
    auto root = find(i);
    auto [it, inserted] = renumber.emplace(root, renumber.size());
    ids[i] = it->second;
  }
  return ids;
}

}  // namespace

ApproxCensusReport epsilon_census(const Coordinates& points, double eps) {
  if (!(eps > 0.0)) throw PreconditionError("eps must be positive");
  const std::size_t n = static_cast<std::size_t>(points.rows());
  if (n < 3) throw PreconditionError("census needs at least 3 points, got " + std::to_string(n));

  Eigen::MatrixXd d(points.rows(), points.rows());
  double scale = 0.0;
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    d(i, i) = 0.0;
    for (Eigen::Index j = i + 1; j < points.rows(); ++j) {
      d(i, j) = d(j, i) = (points.row(i) - points.row(j)).squaredNorm();
      scale = std::max(scale, d(i, j));
    }
  }
  if (!std::isfinite(scale) || scale <= 0.0) {
    throw PreconditionError("configuration has no finite positive extent");
  }
  const double tol = eps * scale;
  std::vector<double> dists;
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < points.rows(); ++j) {
      if (d(i, j) <= tol) {
        throw PreconditionError("points " + std::to_string(i) + " and " + std::to_string(j) +
                                " are closer than the census resolution");
      }
      dists.push_back(d(i, j));
    }
  }

  ApproxCensusReport report;
  report.n_points = n;

  std::sort(dists.begin(), dists.end());
  auto dist_ids = single_linkage(
      dists, [tol](double x, double y) { return std::abs(x - y) <= tol; },
      [tol](double x, double y) { return y - x > tol; });
  for (std::size_t i = 0; i < dists.size(); ++i) {
    if (dist_ids[i] == report.distinct_distances.size()) report.distinct_distances.push_back(dists[i]);
  }

  std::vector<ApproxTriangleSignature> sigs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        std::array<double, 3> s{d(i, j), d(i, k), d(j, k)};
        if (sixteen_area_squared(s[0], s[1], s[2]) <= eps * scale * scale) {
          ++report.degenerate_triples;
          continue;
        }
        std::sort(s.begin(), s.end());
        sigs.push_back({s[0], s[1], s[2]});
      }
    }
  }
  std::sort(sigs.begin(), sigs.end());
  auto near = [tol](const ApproxTriangleSignature& x, const ApproxTriangleSignature& y) {
    return std::abs(x.a - y.a) <= tol && std::abs(x.b - y.b) <= tol && std::abs(x.c - y.c) <= tol;
  };
  auto ids = single_linkage(sigs, near, [tol](const auto& x, const auto& y) { return y.a - x.a > tol; });
  for (std::size_t i = 0; i < sigs.size(); ++i) {
    if (ids[i] == report.triangle_classes.size()) {
      const auto& s = sigs[i];
      TriangleKind kind = TriangleKind::scalene;
      if (s.c - s.a <= tol) {
        kind = TriangleKind::equilateral;
      } else if (s.b - s.a <= tol || s.c - s.b <= tol) {
        kind = TriangleKind::isosceles;
      }
      report.triangle_classes.push_back({s, kind, 0});
    }
    ++report.triangle_classes[ids[i]].multiplicity;
  }
  return report;
}

}  // namespace onetri
