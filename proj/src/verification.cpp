#include <algorithm>
#include <string>

#include "onetri/combinatorics.hpp"
#include "onetri/error.hpp"

namespace onetri {
namespace {

std::vector<EdgeLabeling> one_triangle_labelings(std::size_t n, TriangleKind kind) {
  if (n <= kMaxEnumerationVertices) return enumerate_one_triangle_labelings(n, kind).representatives;
  // Beyond brute-force range only the one-letter alphabet is tractable, and it
  // admits exactly the uniform labeling.
  if (kind != TriangleKind::equilateral) {
    throw PreconditionError("labelings for n > " + std::to_string(kMaxEnumerationVertices) +
                            " are only available for the equilateral type");
  }
  auto uniform = EdgeLabeling::uniform(n, 0);
  if (!triangle_constraint_holds(uniform, TriangleType(kind))) return {};
  return {uniform};
}

std::vector<LabelingCheck> check_all(const std::vector<EdgeLabeling>& labelings,
                                     const std::vector<ValueAssignment>& grid, std::size_t dim) {
  std::vector<LabelingCheck> checks;
  for (const auto& labeling : labelings) {
    for (const auto& values : grid) {
      LabelingCheck check{labeling, values, embedding_dimension(labeling_matrix(labeling, values)), false};
      check.fits = check.realizability.realizable_in(dim);
      checks.push_back(std::move(check));
    }
  }
  return checks;
}

TriangleSignature expected_signature(TriangleKind kind, const ValueAssignment& v) {
  switch (kind) {
    case TriangleKind::equilateral: return triangle_signature(v[0], v[0], v[0]);
    case TriangleKind::isosceles: return triangle_signature(v[0], v[0], v[1]);
    case TriangleKind::scalene: return triangle_signature(v[0], v[1], v[2]);
  }
  throw PreconditionError("unknown triangle kind");
}

// Names the four-point family realizing `values` and, when the side lengths
// are rational, builds it.
Witness four_point_witness(TriangleKind kind, const ValueAssignment& values) {
  Witness w;
  if (kind == TriangleKind::isosceles) {
    const Rational h2 = values[0] - values[1] / 2;
    w.family = sgn(h2) == 0 ? "square" : "iso-tet";
    auto d2 = exact_sqrt(values[1]);
    auto h = exact_sqrt(h2);
    if (d2 && h) w.params = ConstructionParams{Family::iso_tet, {*d2, *h}};
  } else {
    std::vector<Rational> s(values.begin(), values.end());
    std::sort(s.begin(), s.end());
    if (s[0] + s[1] == s[2]) {
      w.family = "rectangle";
      auto a = exact_sqrt(s[0]);
      auto b = exact_sqrt(s[1]);
      if (a && b) w.params = ConstructionParams{Family::rectangle, {*a, *b}};
    } else {
      w.family = "opp-edge-tet";
      auto p = exact_sqrt((s[0] + s[1] - s[2]) / 2);
      auto q = exact_sqrt((s[0] + s[2] - s[1]) / 2);
      auto r = exact_sqrt((s[1] + s[2] - s[0]) / 2);
      if (p && q && r) w.params = ConstructionParams{Family::opp_edge_tet, {*p, *q, *r}};
    }
  }
  return w;
}

void build_and_check(Witness& w, const TriangleSignature& expected, std::size_t dim) {
  if (!w.params) return;
  w.config = construct(*w.params);
  const CensusReport report = census(*w.config);
  w.embedding_dim = embedding_dimension(distance_matrix(*w.config)).rank;
  w.verified = report.class_count() == 1 && report.degenerate_triples == 0 &&
               report.triangle_classes.front().signature == expected && w.embedding_dim <= dim;
}

}  // namespace

void validate_assignment(TriangleKind kind, const ValueAssignment& values) {
  const TriangleType type(kind);
  if (values.size() != type.alphabet_size()) {
    throw PreconditionError(std::string(to_string(kind)) + " assignments need " +
                            std::to_string(type.alphabet_size()) + " value(s), got " +
                            std::to_string(values.size()));
  }
  for (const auto& v : values) {
    if (sgn(v) <= 0) throw PreconditionError("label values must be positive, got " + v.get_str());
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (values[i] == values[j]) throw PreconditionError("distinct labels need distinct values");
    }
  }
  const auto& v = values;
  const bool degenerate = kind == TriangleKind::equilateral ? false
                          : kind == TriangleKind::isosceles ? is_degenerate_triple(v[0], v[0], v[1])
                                                            : is_degenerate_triple(v[0], v[1], v[2]);
  if (degenerate) throw PreconditionError("label values describe a degenerate triangle");
}

SquaredDistanceMatrix labeling_matrix(const EdgeLabeling& labeling, const ValueAssignment& values) {
  const std::size_t n = labeling.vertices();
  std::vector<Rational> entries(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Label l = labeling.label(i, j);
      if (l >= values.size()) throw PreconditionError("label without an assigned value");
      entries[i * n + j] = entries[j * n + i] = values[l];
    }
  }
  return SquaredDistanceMatrix(n, std::move(entries));
}

std::vector<ValueAssignment> default_value_grid(TriangleKind kind) {
  switch (kind) {
    case TriangleKind::equilateral: return {{2}};
    case TriangleKind::isosceles: return {{2, 4}, {3, 4}};
    case TriangleKind::scalene: return {{5, 10, 13}, {13, 40, 45}, {9, 16, 25}};
  }
  return {};
}

VerificationRecord verify_bound(std::size_t dim, TriangleKind kind,
                                const std::vector<ValueAssignment>& value_grid) {
  if (dim < kMinVerifyDimension || dim > kMaxVerifyDimension) {
    throw PreconditionError("verification supports dimensions " + std::to_string(kMinVerifyDimension) +
                            ".." + std::to_string(kMaxVerifyDimension) + ", got " + std::to_string(dim));
  }
  VerificationRecord record;
  record.dimension = dim;
  record.kind = kind;
  record.value_grid = value_grid;
  if (record.value_grid.empty()) {
    if (kind != TriangleKind::equilateral) {
      throw PreconditionError("non-equilateral verification needs a non-empty value grid");
    }
    record.value_grid = default_value_grid(kind);
  }
  for (const auto& values : record.value_grid) validate_assignment(kind, values);

  const bool equilateral = kind == TriangleKind::equilateral;
  record.tested_points = equilateral ? dim + 2 : 5;
  const auto survivors = one_triangle_labelings(record.tested_points, kind);
  record.tested_survivors = survivors.size();
  record.tested_checks = check_all(survivors, record.value_grid, dim);

  if (std::any_of(record.tested_checks.begin(), record.tested_checks.end(),
                  [](const LabelingCheck& c) { return c.fits; })) {
    record.max_points = record.tested_points;
    return record;
  }

  const std::size_t below = record.tested_points - 1;
  record.witness_checks = check_all(one_triangle_labelings(below, kind), record.value_grid, dim);

  if (equilateral) {
    Witness w;
    w.family = "simplex";
    w.params = ConstructionParams{Family::simplex, {Rational(static_cast<long>(dim))}};
    build_and_check(w, triangle_signature(2, 2, 2), dim);
    w.verified = w.verified && w.embedding_dim == dim;
    record.witnesses.push_back(std::move(w));
  } else {
    for (const auto& check : record.witness_checks) {
      if (!check.fits) continue;
      Witness w = four_point_witness(kind, check.values);
      auto same_family = [&](const Witness& other) { return other.family == w.family; };
      if (std::any_of(record.witnesses.begin(), record.witnesses.end(), same_family)) continue;
      build_and_check(w, expected_signature(kind, check.values), dim);
      if (!w.params) {
        // Irrational side lengths: the exact embedding rank stands in for the construction.
        w.embedding_dim = check.realizability.rank;
        w.verified = true;
      }
      record.witnesses.push_back(std::move(w));
    }
  }

  const bool witnessed = std::any_of(record.witnesses.begin(), record.witnesses.end(),
                                     [](const Witness& w) { return w.verified; });
  record.max_points = witnessed ? below : 3;
  return record;
}

}  // namespace onetri
