#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "onetri/geometry.hpp"
#include "onetri/rational.hpp"

namespace onetri::testing {

inline Rational random_rational(std::mt19937_64& rng, long lo, long hi, long max_den = 6) {
  std::uniform_int_distribution<long> num(lo * max_den, hi * max_den);
  std::uniform_int_distribution<long> den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Rational random_positive(std::mt19937_64& rng, long hi = 20, long max_den = 7) {
  std::uniform_int_distribution<long> num(1, hi * max_den);
  std::uniform_int_distribution<long> den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline PointConfig random_config(std::mt19937_64& rng, std::size_t n, std::size_t dim, long range = 3) {
  for (;;) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> c;
      for (std::size_t k = 0; k < dim; ++k) c.push_back(random_rational(rng, -range, range, 3));
      pts.emplace_back(std::move(c));
    }
    try {
      return PointConfig(std::move(pts));
    } catch (const std::exception&) {
      // coincident draw, retry
    }
  }
}

inline PointConfig config_from(std::initializer_list<std::initializer_list<Rational>> rows) {
  std::vector<Point> pts;
  for (auto row : rows) pts.emplace_back(std::vector<Rational>(row));
  return PointConfig(std::move(pts));
}

// Exact rank by plain Gaussian elimination; kept separate from the
// library's symmetric elimination so the two can check each other.
inline std::size_t reference_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Affine dimension of a point set: rank of the centered coordinate matrix.
inline std::size_t affine_dimension(const PointConfig& cfg) {
  std::vector<Rational> centroid(cfg.ambient_dim(), Rational(0));
  for (const auto& p : cfg.points()) {
    for (std::size_t k = 0; k < p.dim(); ++k) centroid[k] += p[k];
  }
  for (auto& c : centroid) c /= static_cast<long>(cfg.size());
  std::vector<std::vector<Rational>> rows;
  for (const auto& p : cfg.points()) {
    std::vector<Rational> r;
    for (std::size_t k = 0; k < p.dim(); ++k) r.push_back(p[k] - centroid[k]);
    rows.push_back(std::move(r));
  }
  return reference_rank(std::move(rows));
}

}  // namespace onetri::testing
