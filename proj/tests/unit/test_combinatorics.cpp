#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "onetri/combinatorics.hpp"
#include "onetri/error.hpp"

using namespace onetri;

namespace {

const TriangleType kEq(TriangleKind::equilateral);
const TriangleType kIso(TriangleKind::isosceles);
const TriangleType kSca(TriangleKind::scalene);

EdgeLabeling k4(std::initializer_list<Label> ab_ac_ad_bc_bd_cd) {
  return EdgeLabeling(4, std::vector<Label>(ab_ac_ad_bc_bd_cd));
}

// Every labeling of K_n over the alphabet, filtered by the constraint and
// deduplicated by orbit enumeration; independent of the library's search.
std::size_t brute_force_classes(std::size_t n, const TriangleType& type) {
  const std::size_t edges = n * (n - 1) / 2;
  std::size_t total = 1;
  for (std::size_t e = 0; e < edges; ++e) total *= type.alphabet_size();
  std::vector<std::vector<Label>> seen;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Label> labels(edges);
    std::size_t c = code;
    for (auto& l : labels) {
      l = static_cast<Label>(c % type.alphabet_size());
      c /= type.alphabet_size();
    }
    EdgeLabeling lab(n, labels);
    if (!triangle_constraint_holds(lab, type)) continue;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Label> best = labels;
    do {
      best = std::min(best, lab.permuted(perm).labels());
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (std::find(seen.begin(), seen.end(), best) == seen.end()) seen.push_back(best);
  }
  return seen.size();
}

}  // namespace

TEST(EdgeLabeling, IndexingAndFormatting) {
  EXPECT_EQ(edge_index(4, 0, 1), 0u);
  EXPECT_EQ(edge_index(4, 0, 3), 2u);
  EXPECT_EQ(edge_index(4, 1, 2), 3u);
  EXPECT_EQ(edge_index(4, 3, 2), 5u);
  auto lab = k4({0, 0, 1, 1, 0, 0});
  EXPECT_EQ(lab.to_string(kIso), "0-1:d1 0-2:d1 0-3:d2 1-2:d2 1-3:d1 2-3:d1");
  EXPECT_EQ(EdgeLabeling::uniform(3, 0).to_string(kEq), "0-1:x 0-2:x 1-2:x");
  EXPECT_THROW(EdgeLabeling(4, {0, 0}), PreconditionError);
}

TEST(TriangleConstraint, Examples) {
  // AB = CD = d2, the rest d1.
  EXPECT_TRUE(triangle_constraint_holds(k4({1, 0, 0, 0, 0, 1}), kIso));
  EXPECT_TRUE(triangle_constraint_holds(EdgeLabeling::uniform(4, 0), kEq));
  // Vertex 0 sees d1 on all three edges.
  EXPECT_FALSE(triangle_constraint_holds(k4({0, 0, 0, 1, 2, 1}), kSca));
  EXPECT_TRUE(triangle_constraint_holds(k4({0, 1, 2, 2, 1, 0}), kSca));
}

TEST(CanonicalForm, InvariantUnderTransposition) {
  auto lab = k4({0, 1, 1, 0, 0, 1});
  auto swapped = lab.permuted({1, 0, 2, 3});
  EXPECT_EQ(canonical_form(lab), canonical_form(swapped));
  EXPECT_EQ(canonical_form(canonical_form(lab)), canonical_form(lab));
}

TEST(CanonicalForm, OppositeEdgeOrbitIsOneForm) {
  auto lab = k4({0, 1, 2, 2, 1, 0});
  std::vector<std::size_t> perm{0, 1, 2, 3};
  const auto ref = canonical_form(lab);
  std::size_t count = 0;
  do {
    EXPECT_EQ(canonical_form(lab.permuted(perm)), ref);
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(count, 24u);
}

TEST(CanonicalForm, DistinguishesNonIsomorphicLabelings) {
  auto opposite = k4({0, 1, 2, 2, 1, 0});
  auto path = k4({0, 1, 1, 2, 2, 0});  // labels concentrated along a path
  EXPECT_NE(canonical_form(opposite), canonical_form(path));
}

TEST(CanonicalForm, RandomPermutationsAgree) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 3 + i % 5;
    std::vector<Label> labels(n * (n - 1) / 2);
    for (auto& l : labels) l = static_cast<Label>(rng() % 3);
    EdgeLabeling lab(n, labels);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(canonical_form(lab.permuted(perm)), canonical_form(lab));
  }
}

TEST(Enumerate, ReproducesTheClassification) {
  EXPECT_EQ(enumerate_one_triangle_labelings(5, TriangleKind::isosceles).count(), 0u);
  EXPECT_EQ(enumerate_one_triangle_labelings(5, TriangleKind::scalene).count(), 0u);

  auto sca4 = enumerate_one_triangle_labelings(4, TriangleKind::scalene);
  ASSERT_EQ(sca4.count(), 1u);
  // Opposite edges share labels.
  const auto& s = sca4.representatives[0];
  EXPECT_EQ(s.label(0, 1), s.label(2, 3));
  EXPECT_EQ(s.label(0, 2), s.label(1, 3));
  EXPECT_EQ(s.label(0, 3), s.label(1, 2));

  auto iso4 = enumerate_one_triangle_labelings(4, TriangleKind::isosceles);
  ASSERT_EQ(iso4.count(), 1u);
  const auto& l = iso4.representatives[0].labels();
  EXPECT_EQ(std::count(l.begin(), l.end(), Label{1}), 2);  // two opposite d2 edges

  for (std::size_t n = 3; n <= 7; ++n) {
    auto eq = enumerate_one_triangle_labelings(n, TriangleKind::equilateral);
    ASSERT_EQ(eq.count(), 1u);
    EXPECT_EQ(eq.representatives[0], EdgeLabeling::uniform(n, 0));
  }
}

TEST(Enumerate, AgreesWithUnprunedBruteForce) {
  for (std::size_t n = 3; n <= 5; ++n) {
    for (const auto& type : {kEq, kIso, kSca}) {
      EXPECT_EQ(enumerate_one_triangle_labelings(n, type.kind()).count(), brute_force_classes(n, type))
          << n << " " << to_string(type.kind());
    }
  }
}

TEST(Enumerate, CountsNonIncreasingInN) {
  for (auto kind : {TriangleKind::equilateral, TriangleKind::isosceles, TriangleKind::scalene}) {
    std::size_t prev = enumerate_one_triangle_labelings(3, kind).count();
    for (std::size_t n = 4; n <= 6; ++n) {
      const auto result = enumerate_one_triangle_labelings(n, kind);
      EXPECT_LE(result.count(), prev);
      prev = result.count();
      // Every induced sub-labeling also satisfies the constraint.
      for (const auto& rep : result.representatives) {
        std::vector<Label> sub;
        for (std::size_t i = 0; i + 1 < n; ++i)
          for (std::size_t j = i + 1; j + 1 < n; ++j) sub.push_back(rep.label(i, j));
        EXPECT_TRUE(triangle_constraint_holds(EdgeLabeling(n - 1, sub), TriangleType(kind)));
      }
    }
  }
}

TEST(Enumerate, RangeChecked) {
  EXPECT_THROW(enumerate_one_triangle_labelings(2, TriangleKind::scalene), PreconditionError);
  EXPECT_THROW(enumerate_one_triangle_labelings(8, TriangleKind::scalene), PreconditionError);
}

TEST(CensusConsistency, RealizedRepresentativesHaveOneClass) {
  for (auto kind : {TriangleKind::equilateral, TriangleKind::isosceles, TriangleKind::scalene}) {
    for (const auto& rep : enumerate_one_triangle_labelings(4, kind).representatives) {
      for (const auto& values : default_value_grid(kind)) {
        const auto d = labeling_matrix(rep, values);
        const auto real = realize_coordinates(d, 3);
        const auto r = epsilon_census(real.points, 1e-9);
        EXPECT_EQ(r.class_count(), 1u);
      }
    }
  }
}

TEST(VerifyBound, EquilateralThree) {
  auto rec = verify_bound(3, TriangleKind::equilateral, {});
  EXPECT_EQ(rec.tested_points, 5u);
  EXPECT_EQ(rec.tested_survivors, 1u);
  ASSERT_FALSE(rec.tested_checks.empty());
  EXPECT_EQ(rec.tested_checks[0].realizability.rank, 4u);
  EXPECT_FALSE(rec.tested_checks[0].fits);
  EXPECT_EQ(rec.max_points, 4u);
  ASSERT_EQ(rec.witnesses.size(), 1u);
  EXPECT_EQ(rec.witnesses[0].family, "simplex");
  EXPECT_TRUE(rec.witnesses[0].verified);
}

TEST(VerifyBound, EquilateralFour) {
  auto rec = verify_bound(4, TriangleKind::equilateral, {});
  EXPECT_EQ(rec.max_points, 5u);
  EXPECT_EQ(rec.witnesses.at(0).family, "simplex");
  EXPECT_EQ(rec.witnesses.at(0).config->size(), 5u);
}

TEST(VerifyBound, EquilateralTenUsesUniformLabeling) {
  auto rec = verify_bound(10, TriangleKind::equilateral, {});
  EXPECT_EQ(rec.tested_points, 12u);
  EXPECT_EQ(rec.tested_checks.at(0).realizability.rank, 11u);
  EXPECT_EQ(rec.max_points, 11u);
}

TEST(VerifyBound, ScaleneThree) {
  auto rec = verify_bound(3, TriangleKind::scalene, {{5, 10, 13}});
  EXPECT_EQ(rec.tested_points, 5u);
  EXPECT_EQ(rec.tested_survivors, 0u);
  EXPECT_EQ(rec.max_points, 4u);
  ASSERT_EQ(rec.witnesses.size(), 1u);
  EXPECT_EQ(rec.witnesses[0].family, "opp-edge-tet");
  EXPECT_EQ(rec.witnesses[0].params->params, (std::vector<Rational>{1, 2, 3}));
  EXPECT_TRUE(rec.witnesses[0].verified);
}

TEST(VerifyBound, DefaultGridsNameAllFourPointFamilies) {
  auto iso = verify_bound(3, TriangleKind::isosceles, default_value_grid(TriangleKind::isosceles));
  std::vector<std::string> fams;
  for (const auto& w : iso.witnesses) fams.push_back(w.family);
  EXPECT_EQ(fams, (std::vector<std::string>{"square", "iso-tet"}));

  auto sca = verify_bound(5, TriangleKind::scalene, default_value_grid(TriangleKind::scalene));
  fams.clear();
  for (const auto& w : sca.witnesses) fams.push_back(w.family);
  EXPECT_EQ(fams, (std::vector<std::string>{"opp-edge-tet", "rectangle"}));
  EXPECT_EQ(sca.max_points, 4u);
}

TEST(VerifyBound, ObtuseScaleneHasNoFourPointRealization) {
  auto rec = verify_bound(3, TriangleKind::scalene, {{4, 9, 16}});
  ASSERT_EQ(rec.witness_checks.size(), 1u);
  EXPECT_FALSE(rec.witness_checks[0].realizability.psd);
  EXPECT_TRUE(rec.witnesses.empty());
  EXPECT_EQ(rec.max_points, 3u);
}

TEST(VerifyBound, IrrationalSidesStillWitnessed) {
  // d2^2 = 3 has no rational root; the exact rank carries the witness.
  auto rec = verify_bound(3, TriangleKind::isosceles, {{5, 3}});
  ASSERT_EQ(rec.witnesses.size(), 1u);
  EXPECT_EQ(rec.witnesses[0].family, "iso-tet");
  EXPECT_FALSE(rec.witnesses[0].params);
  EXPECT_EQ(rec.witnesses[0].embedding_dim, 3u);
  EXPECT_EQ(rec.max_points, 4u);
}

TEST(VerifyBound, InvalidInput) {
  EXPECT_THROW(verify_bound(2, TriangleKind::equilateral, {}), PreconditionError);
  EXPECT_THROW(verify_bound(11, TriangleKind::equilateral, {}), PreconditionError);
  EXPECT_THROW(verify_bound(3, TriangleKind::scalene, {}), PreconditionError);
  EXPECT_THROW(verify_bound(3, TriangleKind::scalene, {{5, 5, 13}}), PreconditionError);
  EXPECT_THROW(verify_bound(3, TriangleKind::scalene, {{5, 10}}), PreconditionError);
  EXPECT_THROW(verify_bound(3, TriangleKind::isosceles, {{0, 4}}), PreconditionError);
  EXPECT_THROW(verify_bound(3, TriangleKind::isosceles, {{1, 4}}), PreconditionError);  // degenerate
}
