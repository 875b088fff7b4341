#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "onetri/geometry.hpp"
#include "onetri/rational.hpp"

namespace onetri {

/// Dense exact symmetric matrix, row-major.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  /// Throws PreconditionError if `entries` is not n*n or not symmetric.
  SymmetricMatrix(std::size_t n, std::vector<Rational> entries);

  std::size_t size() const noexcept { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> entries_;
};

/// Inner products of the points relative to the point `base_index`; the base
/// point itself is dropped, so the matrix is (n-1) x (n-1).
struct GramMatrix {
  SymmetricMatrix entries;
  std::size_t base_index = 0;
};

GramMatrix gram_from_squared_distances(const SquaredDistanceMatrix& d, std::size_t base);

/// v^T G v, exact.
Rational quadratic_form(const SymmetricMatrix& g, std::span<const Rational> v);

struct PsdRank {
  bool psd = true;
  std::size_t rank = 0;
  /// Present iff !psd; satisfies v^T G v < 0.
  std::optional<std::vector<Rational>> witness;
};

/// Exact symmetric elimination with largest-remaining-diagonal pivoting.
PsdRank psd_rank(const SymmetricMatrix& g);

struct RealizabilityReport {
  bool psd = true;
  std::size_t rank = 0;
  /// Empty means not realizable in any Euclidean space.
  std::optional<std::size_t> min_embedding_dim;
  /// Negative direction of the Gram matrix taken at base point 0.
  std::optional<std::vector<Rational>> witness;

  bool realizable_in(std::size_t dim) const noexcept {
    return min_embedding_dim && *min_embedding_dim <= dim;
  }
};

RealizabilityReport embedding_dimension(const SquaredDistanceMatrix& d);

struct Realization {
  Coordinates points;  // n x dim, point 0 at the origin
  double max_relative_residual = 0.0;
};

inline constexpr double kRealizationTolerance = 1e-9;

/// Approximate coordinates in R^dim reproducing `d`. Throws NotRealizable when
/// no such embedding exists and ResidualTooLarge when the reconstruction misses
/// `kRealizationTolerance`.
Realization realize_coordinates(const SquaredDistanceMatrix& d, std::size_t dim);

}  // namespace onetri
