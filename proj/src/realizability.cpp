#include "onetri/realizability.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "onetri/error.hpp"

namespace onetri {
namespace {

using DenseMatrix = std::vector<std::vector<Rational>>;

std::size_t rank_of(DenseMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (sgn(m[r][col]) == 0) continue;
      const Rational factor = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

// Solves a nonsingular system exactly by Gauss-Jordan elimination.
std::vector<Rational> solve(DenseMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a[pivot][col]) == 0) ++pivot;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      const Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

}  // namespace

SymmetricMatrix::SymmetricMatrix(std::size_t n, std::vector<Rational> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_) throw PreconditionError("matrix entry count mismatch");
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) throw PreconditionError("matrix is not symmetric");
    }
  }
}

GramMatrix gram_from_squared_distances(const SquaredDistanceMatrix& d, std::size_t base) {
  const std::size_t n = d.size();
  if (base >= n) {
    throw PreconditionError("base index " + std::to_string(base) + " out of range for " +
                            std::to_string(n) + " points");
  }
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != base) others.push_back(i);
  }
  const std::size_t m = others.size();
  std::vector<Rational> entries(m * m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = r; c < m; ++c) {
      const std::size_t i = others[r], j = others[c];
      Rational value = (d(base, i) + d(base, j) - d(i, j)) / 2;
      entries[r * m + c] = value;
      entries[c * m + r] = value;
    }
  }
  return {SymmetricMatrix(m, std::move(entries)), base};
}

Rational quadratic_form(const SymmetricMatrix& g, std::span<const Rational> v) {
  if (v.size() != g.size()) throw DimensionMismatch("vector length does not match matrix size");
  Rational sum = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) sum += v[i] * g(i, j) * v[j];
  }
  return sum;
}

PsdRank psd_rank(const SymmetricMatrix& g) {
  const std::size_t n = g.size();
  DenseMatrix original(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) original[i][j] = g(i, j);
  }

  // Schur complement over the indices not yet pivoted on.
  DenseMatrix schur = original;
  std::vector<std::size_t> remaining(n);
  for (std::size_t i = 0; i < n; ++i) remaining[i] = i;
  std::vector<std::size_t> pivots;

  PsdRank result;
  std::vector<Rational> direction;  // over the original indices, zero on pivots

  while (!remaining.empty()) {
    auto best = remaining.begin();
    for (auto it = remaining.begin(); it != remaining.end(); ++it) {
      if (schur[*it][*it] > schur[*best][*best]) best = it;
    }
    const std::size_t p = *best;
    if (sgn(schur[p][p]) > 0) {
      remaining.erase(best);
      for (std::size_t i : remaining) {
        if (sgn(schur[i][p]) == 0) continue;
        const Rational factor = schur[i][p] / schur[p][p];
        for (std::size_t j : remaining) schur[i][j] -= factor * schur[p][j];
      }
      pivots.push_back(p);
      continue;
    }

    if (sgn(schur[p][p]) < 0) {
      direction.assign(n, 0);
      direction[p] = 1;
    } else {
      // Zero diagonal left; any nonzero off-diagonal gives e_i -/+ e_j with
      // value -2|s_ij|.
      for (std::size_t a = 0; a < remaining.size() && direction.empty(); ++a) {
        for (std::size_t b = a + 1; b < remaining.size(); ++b) {
          const std::size_t i = remaining[a], j = remaining[b];
          if (sgn(schur[i][j]) != 0) {
            direction.assign(n, 0);
            direction[i] = 1;
            direction[j] = sgn(schur[i][j]) > 0 ? -1 : 1;
            break;
          }
        }
      }
    }
    break;
  }

  if (!direction.empty()) {
    // Lift the Schur-complement direction: solve G_PP y = -G_PR w on the pivots.
    const std::size_t k = pivots.size();
    DenseMatrix block(k, std::vector<Rational>(k));
    std::vector<Rational> rhs(k);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) block[r][c] = original[pivots[r]][pivots[c]];
      Rational acc = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(direction[j]) != 0) acc += original[pivots[r]][j] * direction[j];
      }
      rhs[r] = -acc;
    }
    if (k > 0) {
      auto y = solve(std::move(block), std::move(rhs));
      for (std::size_t r = 0; r < k; ++r) direction[pivots[r]] = y[r];
    }
    result.psd = false;
    result.rank = rank_of(original);
    if (sgn(quadratic_form(g, direction)) >= 0) {
      throw Error("internal error: PSD witness failed verification");
    }
    result.witness = std::move(direction);
    return result;
  }

  result.psd = true;
  result.rank = pivots.size();
  return result;
}

RealizabilityReport embedding_dimension(const SquaredDistanceMatrix& d) {
  const GramMatrix gram = gram_from_squared_distances(d, 0);
  PsdRank pr = psd_rank(gram.entries);
  RealizabilityReport report;
  report.psd = pr.psd;
  report.rank = pr.rank;
  if (pr.psd) report.min_embedding_dim = pr.rank;
  report.witness = std::move(pr.witness);
  return report;
}

Realization realize_coordinates(const SquaredDistanceMatrix& d, std::size_t dim) {
  const RealizabilityReport report = embedding_dimension(d);
  if (!report.psd) {
    throw NotRealizable("squared distances are not Euclidean (Gram matrix is not PSD)");
  }
  if (!report.realizable_in(dim)) {
    throw NotRealizable("minimal embedding dimension " + std::to_string(*report.min_embedding_dim) +
                        " exceeds target dimension " + std::to_string(dim));
  }

  const std::size_t n = d.size();
  const GramMatrix gram = gram_from_squared_distances(d, 0);
  const auto m = static_cast<Eigen::Index>(n - 1);
  Eigen::MatrixXd g(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      g(i, j) = to_double(gram.entries(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
    }
  }

  Realization out;
  out.points = Coordinates::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(dim));
  if (m > 0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(g);
    const auto used = std::min<Eigen::Index>(static_cast<Eigen::Index>(report.rank), m);
    for (Eigen::Index k = 0; k < used; ++k) {
      const Eigen::Index src = m - 1 - k;  // eigenvalues ascend
      const double lambda = std::max(0.0, eig.eigenvalues()(src));
      out.points.block(1, k, m, 1) = eig.eigenvectors().col(src) * std::sqrt(lambda);
    }
  }

  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double target = to_double(d(i, j));
      const double got = (out.points.row(static_cast<Eigen::Index>(i)) -
                          out.points.row(static_cast<Eigen::Index>(j))).squaredNorm();
      worst = std::max(worst, std::abs(got - target) / target);
    }
  }
  out.max_relative_residual = worst;
  if (!(worst < kRealizationTolerance)) {
    throw ResidualTooLarge("reconstructed distances miss the input by relative residual " +
                               std::to_string(worst),
                           worst);
  }
  return out;
}

}  // namespace onetri
