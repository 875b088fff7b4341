#include "onetri/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <thread>

#include "onetri/error.hpp"

namespace onetri {
namespace {

struct Evaluation {
  double value = 0.0;
  Coordinates gradient;
};

enum class Checks { none, differentiability };

constexpr double kTieTolerance = 1e-7;
constexpr double kAmbiguityTolerance = 1e-9;
constexpr double kMarginBoundaryTolerance = 1e-12;

// Evaluates the defect and, on request, its gradient. Returns nullopt when no
// triple clears the margin.
std::optional<Evaluation> evaluate(const Coordinates& x, double margin, bool with_gradient,
                                   Checks checks) {
  const Eigen::Index n = x.rows();
  const double pairs = static_cast<double>(n * (n - 1) / 2);

  Eigen::MatrixXd d(n, n);
  double total = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    d(i, i) = 0.0;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      d(i, j) = d(j, i) = (x.row(i) - x.row(j)).squaredNorm();
      total += d(i, j);
    }
  }
  const double s = total / pairs;
  if (!(s > 0.0) || !std::isfinite(s)) return std::nullopt;

  struct Triple {
    std::array<std::pair<Eigen::Index, Eigen::Index>, 3> edges;
    std::array<double, 3> sides;  // ascending
    std::array<int, 3> order;     // edge slot feeding each sorted position
    double area16;
    bool included;
  };
  std::vector<Triple> triples;
  triples.reserve(static_cast<std::size_t>(n * (n - 1) * (n - 2) / 6));
  std::size_t included = 0;
  Eigen::Vector3d mean = Eigen::Vector3d::Zero();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      for (Eigen::Index k = j + 1; k < n; ++k) {
        Triple t;
        t.edges = {{{i, j}, {i, k}, {j, k}}};
        const std::array<double, 3> raw{d(i, j), d(i, k), d(j, k)};
        t.order = {0, 1, 2};
        std::sort(t.order.begin(), t.order.end(), [&](int a, int b) { return raw[a] < raw[b]; });
        for (int p = 0; p < 3; ++p) t.sides[p] = raw[t.order[p]];
        t.area16 = sixteen_area_squared(raw[0], raw[1], raw[2]);
        const double q = t.area16 / (s * s);
        if (checks == Checks::differentiability &&
            std::abs(q - margin) <= kMarginBoundaryTolerance * std::max(1.0, margin)) {
          throw NonDifferentiable("triple sits on the degeneracy margin boundary");
        }
        t.included = q > margin;
        if (t.included) {
          ++included;
          mean += Eigen::Vector3d(t.sides[0], t.sides[1], t.sides[2]) / s;
        }
        triples.push_back(t);
      }
    }
  }
  if (included == 0) return std::nullopt;
  const double m = static_cast<double>(included);
  mean /= m;

  Evaluation out;
  Eigen::MatrixXd dd;  // d f / d D_ij, upper triangle
  double ds = 0.0;
  if (with_gradient) dd = Eigen::MatrixXd::Zero(n, n);

  for (const auto& t : triples) {
    if (t.included) {
      const Eigen::Vector3d v(t.sides[0] / s, t.sides[1] / s, t.sides[2] / s);
      const Eigen::Vector3d r = v - mean;
      out.value += r.squaredNorm() / m;
      if (!with_gradient) continue;
      const Eigen::Vector3d g = (2.0 / m) * r;
      if (checks == Checks::differentiability) {
        for (int p = 0; p < 2; ++p) {
          if (t.sides[p + 1] - t.sides[p] <= kTieTolerance * s &&
              std::abs(g[p] - g[p + 1]) > kAmbiguityTolerance) {
            throw NonDifferentiable("tied side lengths make the gradient ambiguous");
          }
        }
      }
      for (int p = 0; p < 3; ++p) {
        auto [a, b] = t.edges[t.order[p]];
        dd(a, b) += g[p] / s;
        ds -= g[p] * t.sides[p] / (s * s);
      }
    } else {
      const double q = t.area16 / (s * s);
      const double gap = margin - q;
      out.value += gap * gap;
      if (!with_gradient) continue;
      const double w = -2.0 * gap;
      std::array<double, 3> raw{};
      for (int p = 0; p < 3; ++p) raw[t.order[p]] = t.sides[p];
      for (int e = 0; e < 3; ++e) {
        const double dh = 2.0 * (raw[(e + 1) % 3] + raw[(e + 2) % 3] - raw[e]);
        auto [a, b] = t.edges[e];
        dd(a, b) += w * dh / (s * s);
      }
      ds += w * (-2.0 * t.area16 / (s * s * s));
    }
  }

  if (with_gradient) {
    out.gradient = Coordinates::Zero(n, x.cols());
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i + 1; j < n; ++j) {
        const double coeff = dd(i, j) + ds / pairs;
        const Eigen::RowVectorXd diff = 2.0 * coeff * (x.row(i) - x.row(j));
        out.gradient.row(i) += diff;
        out.gradient.row(j) -= diff;
      }
    }
  }
  return out;
}

void check_inputs(const Coordinates& x, double margin) {
  if (x.rows() < 3) throw PreconditionError("defect needs at least 3 points");
  if (x.cols() < 1) throw PreconditionError("defect needs dimension at least 1");
  if (!(margin > 0.0 && margin < 1.0)) throw PreconditionError("degeneracy margin must lie in (0, 1)");
  if (!x.allFinite()) throw PreconditionError("configuration has non-finite coordinates");
}

// Centers the configuration and rescales it to unit mean squared pair distance.
void normalize(Coordinates& x) {
  const Eigen::RowVectorXd centroid = x.colwise().mean();
  x.rowwise() -= centroid;
  const Eigen::Index n = x.rows();
  double total = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) total += (x.row(i) - x.row(j)).squaredNorm();
  }
  const double s = total / static_cast<double>(n * (n - 1) / 2);
  if (s > 0.0) x /= std::sqrt(s);
}

double uniform_symmetric(std::mt19937_64& rng) {
  // 53 random bits mapped onto [-1, 1); identical on every platform.
  return static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;
}

struct RestartRun {
  double defect;
  std::size_t iterations;
  Coordinates config;
};

RestartRun descend(const SearchConfig& cfg, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto n = static_cast<Eigen::Index>(cfg.n);
  const auto dim = static_cast<Eigen::Index>(cfg.dim);
  Coordinates x(n, dim);
  std::optional<Evaluation> current;
  for (int attempt = 0; attempt < 64 && !current; ++attempt) {
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index k = 0; k < dim; ++k) x(i, k) = uniform_symmetric(rng);
    }
    normalize(x);
    current = evaluate(x, cfg.degeneracy_margin, true, Checks::none);
  }
  if (!current) throw Error("could not draw a non-degenerate starting configuration");

  double step = cfg.initial_step;
  std::size_t iter = 0;
  for (; iter < cfg.max_iters; ++iter) {
    if (current->value <= cfg.defect_floor) break;
    const double gnorm2 = current->gradient.squaredNorm();
    if (std::sqrt(gnorm2) < cfg.gradient_tolerance) break;

    bool accepted = false;
    while (step >= cfg.step_tolerance) {
      Coordinates trial = x - step * current->gradient;
      auto next = evaluate(trial, cfg.degeneracy_margin, false, Checks::none);
      if (next && next->value <= current->value - 1e-4 * step * gnorm2) {
        x = std::move(trial);
        accepted = true;
        break;
      }
      step *= cfg.shrink;
    }
    if (!accepted) break;
    normalize(x);
    current = evaluate(x, cfg.degeneracy_margin, true, Checks::none);
    step *= cfg.grow;
  }
  return {current->value, iter, x};
}

}  // namespace

void SearchConfig::validate() const {
  if (n < 3) throw PreconditionError("search needs n >= 3");
  if (dim < 1) throw PreconditionError("search needs dim >= 1");
  if (restarts < 1) throw PreconditionError("search needs at least one restart");
  if (!(degeneracy_margin > 0.0 && degeneracy_margin < 1.0)) {
    throw PreconditionError("degeneracy margin must lie in (0, 1)");
  }
  if (!(initial_step > 0.0) || !(shrink > 0.0 && shrink < 1.0) || !(grow >= 1.0)) {
    throw PreconditionError("step parameters must satisfy step > 0, 0 < shrink < 1, grow >= 1");
  }
  if (!(step_tolerance > 0.0) || !(gradient_tolerance >= 0.0) || !(defect_floor >= 0.0)) {
    throw PreconditionError("tolerances must be non-negative");
  }
}

double triangle_defect(const Coordinates& points, double margin) {
  check_inputs(points, margin);
  auto e = evaluate(points, margin, false, Checks::none);
  if (!e) throw PreconditionError("every triple lies under the degeneracy margin");
  return e->value;
}

Coordinates defect_gradient(const Coordinates& points, double margin) {
  check_inputs(points, margin);
  auto e = evaluate(points, margin, true, Checks::differentiability);
  if (!e) throw PreconditionError("every triple lies under the degeneracy margin");
  return std::move(e->gradient);
}

DefectResult minimize_defect(const SearchConfig& cfg) {
  cfg.validate();
  std::vector<std::optional<RestartRun>> runs(cfg.restarts);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t r = next++; r < cfg.restarts; r = next++) runs[r] = descend(cfg, cfg.seed + r);
  };
  const std::size_t threads =
      std::min<std::size_t>(cfg.restarts, std::max(1u, std::thread::hardware_concurrency()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  DefectResult result;
  std::size_t best = 0;
  for (std::size_t r = 0; r < cfg.restarts; ++r) {
    result.per_restart.push_back({cfg.seed + r, runs[r]->defect, runs[r]->iterations});
    result.iterations_used += runs[r]->iterations;
    if (runs[r]->defect < runs[best]->defect) best = r;
  }
  result.best_defect = runs[best]->defect;
  result.best_config = runs[best]->config;
  return result;
}

SnapResult snap_and_census(const Coordinates& points, double eps, double margin) {
  return {epsilon_census(points, eps), triangle_defect(points, margin)};
}

}  // namespace onetri
