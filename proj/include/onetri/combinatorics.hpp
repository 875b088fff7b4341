#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "onetri/constructions.hpp"
#include "onetri/geometry.hpp"
#include "onetri/realizability.hpp"

namespace onetri {

using Label = std::uint8_t;

/// Abstract label alphabet of one triangle shape. Labels carry identity:
/// for isosceles, label 0 is the repeated side d1 and label 1 the base d2.
class TriangleType {
 public:
  explicit TriangleType(TriangleKind kind) noexcept : kind_(kind) {}

  TriangleKind kind() const noexcept { return kind_; }
  std::size_t alphabet_size() const noexcept;
  /// Sorted label multiset every vertex triple must carry.
  std::array<Label, 3> label_multiset() const noexcept;
  std::string label_name(Label label) const;

 private:
  TriangleKind kind_;
};

/// Labels on the edges of K_n, stored in lexicographic edge order
/// (0-1, 0-2, ..., 0-(n-1), 1-2, ...).
class EdgeLabeling {
 public:
  EdgeLabeling(std::size_t n, std::vector<Label> labels);
  static EdgeLabeling uniform(std::size_t n, Label label);

  std::size_t vertices() const noexcept { return n_; }
  std::size_t edges() const noexcept { return labels_.size(); }
  const std::vector<Label>& labels() const noexcept { return labels_; }
  Label label(std::size_t i, std::size_t j) const;

  /// Relabels vertex v as perm[v].
  EdgeLabeling permuted(const std::vector<std::size_t>& perm) const;

  /// `i-j:name` pairs separated by spaces, edges in lexicographic order.
  std::string to_string(const TriangleType& type) const;

  friend bool operator==(const EdgeLabeling&, const EdgeLabeling&) = default;
  friend auto operator<=>(const EdgeLabeling&, const EdgeLabeling&) = default;

 private:
  std::size_t n_;
  std::vector<Label> labels_;
};

std::size_t edge_index(std::size_t n, std::size_t i, std::size_t j);

/// Every vertex triple carries exactly `type.label_multiset()`.
bool triangle_constraint_holds(const EdgeLabeling& labeling, const TriangleType& type);

/// Lexicographically least relabeling over all n! vertex permutations.
EdgeLabeling canonical_form(const EdgeLabeling& labeling);

inline constexpr std::size_t kMaxEnumerationVertices = 7;

struct EnumerationResult {
  TriangleKind kind;
  std::size_t n;
  std::vector<EdgeLabeling> representatives;  // canonical, sorted

  std::size_t count() const noexcept { return representatives.size(); }
};

/// Exhaustive search over labelings of K_n, 3 <= n <= 7.
EnumerationResult enumerate_one_triangle_labelings(std::size_t n, TriangleKind kind);

/// Squared length per label, indexed by label.
using ValueAssignment = std::vector<Rational>;

/// Throws PreconditionError for wrong arity, non-positive values, or values
/// that break the type's label distinctness.
void validate_assignment(TriangleKind kind, const ValueAssignment& values);

SquaredDistanceMatrix labeling_matrix(const EdgeLabeling& labeling, const ValueAssignment& values);

/// Grid used by `verify` when the caller supplies none.
std::vector<ValueAssignment> default_value_grid(TriangleKind kind);

struct LabelingCheck {
  EdgeLabeling labeling;
  ValueAssignment values;
  RealizabilityReport realizability;
  bool fits = false;  // realizable in the target dimension
};

struct Witness {
  std::string family;  // simplex, square, rectangle, iso-tet, opp-edge-tet
  std::optional<ConstructionParams> params;
  std::optional<PointConfig> config;
  std::size_t embedding_dim = 0;
  bool verified = false;  // census of the construction shows the expected single class
};

struct VerificationRecord {
  std::size_t dimension = 0;
  TriangleKind kind = TriangleKind::equilateral;
  std::vector<ValueAssignment> value_grid;
  std::size_t tested_points = 0;      // d+2 for equilateral, 5 otherwise
  std::size_t tested_survivors = 0;   // labelings passing the triangle constraint there
  std::vector<LabelingCheck> tested_checks;
  std::vector<LabelingCheck> witness_checks;  // one size smaller
  std::size_t max_points = 0;
  std::vector<Witness> witnesses;
};

inline constexpr std::size_t kMinVerifyDimension = 3;
inline constexpr std::size_t kMaxVerifyDimension = 10;

VerificationRecord verify_bound(std::size_t dim, TriangleKind kind,
                                const std::vector<ValueAssignment>& value_grid);

}  // namespace onetri
