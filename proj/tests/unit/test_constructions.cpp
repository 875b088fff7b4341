#include <map>
#include <random>

#include <gtest/gtest.h>

#include "onetri/combinatorics.hpp"
#include "onetri/constructions.hpp"
#include "onetri/error.hpp"
#include "onetri/realizability.hpp"
#include "support.hpp"

using namespace onetri;
using onetri::testing::random_positive;

namespace {

TriangleSignature only_class(const PointConfig& cfg) {
  const auto r = census(cfg);
  EXPECT_EQ(r.class_count(), 1u);
  EXPECT_EQ(r.degenerate_triples, 0u);
  return r.triangle_classes.at(0).signature;
}

// Rebuilds an edge labeling from the value classes of a distance matrix;
// values are ranked by the given order.
EdgeLabeling labeling_from(const SquaredDistanceMatrix& d, const std::vector<Rational>& value_order) {
  std::vector<Label> labels;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      auto it = std::find(value_order.begin(), value_order.end(), d(i, j));
      labels.push_back(static_cast<Label>(it - value_order.begin()));
    }
  return EdgeLabeling(d.size(), labels);
}

}  // namespace

TEST(RegularSimplex, Examples) {
  auto s2 = regular_simplex(2);
  EXPECT_EQ(s2.size(), 3u);
  EXPECT_EQ(only_class(s2), (TriangleSignature{2, 2, 2}));

  auto s3 = regular_simplex(3);
  EXPECT_EQ(s3.size(), 4u);
  EXPECT_EQ(s3.ambient_dim(), 4u);
  EXPECT_EQ(embedding_dimension(distance_matrix(s3)).min_embedding_dim, 3u);

  auto s7 = regular_simplex(7);
  EXPECT_EQ(s7.size(), 8u);
  const auto r = census(s7);
  EXPECT_EQ(r.distinct_distance_count(), 1u);
  EXPECT_EQ(r.class_count(), 1u);
  EXPECT_EQ(embedding_dimension(distance_matrix(s7)).rank, 7u);

  EXPECT_THROW(regular_simplex(0), PreconditionError);
}

TEST(Rectangle, Examples) {
  EXPECT_EQ(only_class(rectangle(3, 4)), (TriangleSignature{9, 16, 25}));
  auto square = census(rectangle(1, 1));
  EXPECT_EQ(square.triangle_classes.at(0).signature, (TriangleSignature{1, 1, 2}));
  EXPECT_EQ(square.triangle_classes.at(0).kind, TriangleKind::isosceles);
  EXPECT_EQ(only_class(rectangle(1, 2)), (TriangleSignature{1, 4, 5}));
  EXPECT_THROW(rectangle(0, 1), PreconditionError);
  EXPECT_THROW(rectangle(1, -2), PreconditionError);
}

TEST(IsoscelesTetrahedron, Examples) {
  auto flat = isosceles_tetrahedron(2, 0);
  const auto d = distance_matrix(flat);
  EXPECT_EQ(d(0, 2), 2);  // cross edge: d1^2 = d2^2 / 2
  EXPECT_EQ(d(0, 1), 4);
  EXPECT_EQ(embedding_dimension(d).min_embedding_dim, 2u);

  auto tall = isosceles_tetrahedron(2, 1);
  EXPECT_EQ(only_class(tall), (TriangleSignature{3, 3, 4}));
  EXPECT_EQ(embedding_dimension(distance_matrix(tall)).min_embedding_dim, 3u);

  EXPECT_EQ(only_class(isosceles_tetrahedron(1, 1)), (TriangleSignature{Rational(1), Rational(3, 2), Rational(3, 2)}));
  EXPECT_THROW(isosceles_tetrahedron(0, 1), PreconditionError);
  EXPECT_THROW(isosceles_tetrahedron(1, -1), PreconditionError);
}

TEST(OppositeEdgeTetrahedron, Examples) {
  auto t = opposite_edge_tetrahedron(1, 2, 3);
  EXPECT_EQ(only_class(t), (TriangleSignature{5, 10, 13}));
  EXPECT_EQ(embedding_dimension(distance_matrix(t)).min_embedding_dim, 3u);
  EXPECT_EQ(only_class(opposite_edge_tetrahedron(2, 3, 6)), (TriangleSignature{13, 40, 45}));
  EXPECT_THROW(opposite_edge_tetrahedron(1, 2, 2), PreconditionError);
  EXPECT_THROW(opposite_edge_tetrahedron(1, 0, 2), PreconditionError);
}

TEST(Construct, DispatchAndArity) {
  EXPECT_EQ(construct({Family::simplex, {3}}).size(), 4u);
  EXPECT_EQ(construct({Family::rectangle, {2}}).size(), 4u);
  EXPECT_EQ(construct({parse_family("opp_edge_tet"), {1, 2, 3}}).size(), 4u);
  EXPECT_EQ(parse_family("square"), Family::rectangle);
  EXPECT_THROW(construct({Family::simplex, {Rational(3, 2)}}), PreconditionError);
  EXPECT_THROW(construct({Family::iso_tet, {1}}), PreconditionError);
  EXPECT_THROW(parse_family("cube"), PreconditionError);
}

TEST(ConstructionProperties, OneClassLaw) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    only_class(regular_simplex(2 + i % 8));

    Rational a = random_positive(rng), b = random_positive(rng);
    only_class(rectangle(a, b));

    Rational h = (i % 5 == 0) ? Rational(0) : random_positive(rng);
    auto iso = census(isosceles_tetrahedron(random_positive(rng), h));
    ASSERT_EQ(iso.class_count(), 1u);
    EXPECT_NE(iso.triangle_classes[0].kind, TriangleKind::scalene);

    Rational p = random_positive(rng), q = random_positive(rng), r = random_positive(rng);
    if (p == q || q == r || p == r) continue;
    auto opp = census(opposite_edge_tetrahedron(p, q, r));
    ASSERT_EQ(opp.class_count(), 1u);
    EXPECT_EQ(opp.triangle_classes[0].kind, TriangleKind::scalene);
  }
}

TEST(ConstructionProperties, DistinctDistanceCounts) {
  EXPECT_EQ(census(regular_simplex(5)).distinct_distance_count(), 1u);
  EXPECT_EQ(census(rectangle(2, 2)).distinct_distance_count(), 2u);
  EXPECT_EQ(census(rectangle(2, 3)).distinct_distance_count(), 3u);
  const auto iso = census(isosceles_tetrahedron(2, 1));
  EXPECT_EQ(iso.distinct_distance_count(), 2u);
  EXPECT_EQ(iso.distinct_distances, (std::vector<Rational>{3, 4}));
  EXPECT_EQ(census(opposite_edge_tetrahedron(1, 2, 3)).distinct_distance_count(), 3u);
}

TEST(ConstructionProperties, FamiliesMatchCanonicalLabelings) {
  const auto iso_rep = enumerate_one_triangle_labelings(4, TriangleKind::isosceles).representatives.at(0);
  const auto sca_rep = enumerate_one_triangle_labelings(4, TriangleKind::scalene).representatives.at(0);
  std::mt19937_64 rng(32);
  for (int i = 0; i < 30; ++i) {
    const Rational d2 = random_positive(rng), h = random_positive(rng);
    const auto d = distance_matrix(isosceles_tetrahedron(d2, h));
    const Rational d1sq = d2 * d2 / 2 + h * h;
    const auto lab = labeling_from(d, {d1sq, Rational(d2 * d2)});
    EXPECT_TRUE(triangle_constraint_holds(lab, TriangleType(TriangleKind::isosceles)));
    EXPECT_EQ(canonical_form(lab), iso_rep);

    Rational p = random_positive(rng), q = random_positive(rng), r = random_positive(rng);
    if (p == q || q == r || p == r) continue;
    const auto od = distance_matrix(opposite_edge_tetrahedron(p, q, r));
    std::vector<Rational> values{p * p + q * q, p * p + r * r, q * q + r * r};
    std::sort(values.begin(), values.end());
    const auto olab = labeling_from(od, values);
    EXPECT_TRUE(triangle_constraint_holds(olab, TriangleType(TriangleKind::scalene)));
    EXPECT_EQ(canonical_form(olab), sca_rep);
  }
}

TEST(ConstructionProperties, OppositeEdgeFacesAreAcute) {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 200; ++i) {
    Rational p = random_positive(rng), q = random_positive(rng), r = random_positive(rng);
    if (p == q || q == r || p == r) continue;
    const auto s = census(opposite_edge_tetrahedron(p, q, r)).triangle_classes.at(0).signature;
    EXPECT_GT(s.a + s.b - s.c, 0);
    EXPECT_GT(s.b + s.c - s.a, 0);
    EXPECT_GT(s.a + s.c - s.b, 0);
  }
}
