#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "onetri/geometry.hpp"
#include "onetri/rational.hpp"

namespace onetri {

enum class Family { simplex, rectangle, iso_tet, opp_edge_tet };

const char* to_string(Family family) noexcept;
/// Accepts `simplex`, `rectangle`, `square`, `iso-tet`, `opp-edge-tet` (and `_` spellings).
Family parse_family(std::string_view name);

/// Family tag plus its positive rational parameters:
/// simplex (d), rectangle (a, b), iso_tet (d2, h), opp_edge_tet (p, q, r).
struct ConstructionParams {
  Family family;
  std::vector<Rational> params;
};

/// Standard basis of R^{d+1}: a regular d-simplex with squared edge 2.
PointConfig regular_simplex(long d);

/// (0,0), (a,0), (0,b), (a,b).
PointConfig rectangle(const Rational& a, const Rational& b);

/// (+-d2/2, 0, 0) and (0, +-d2/2, h): two opposite edges of length d2 and four
/// cross edges of squared length d2^2/2 + h^2. h = 0 gives a square.
PointConfig isosceles_tetrahedron(const Rational& d2, const Rational& h);

/// Alternate corners of a p x q x r box: opposite edges pairwise congruent with
/// squared lengths p^2+q^2, p^2+r^2, q^2+r^2. Parameters must be distinct.
PointConfig opposite_edge_tetrahedron(const Rational& p, const Rational& q, const Rational& r);

/// Dispatches on `params.family`, validating the parameter count.
PointConfig construct(const ConstructionParams& params);

}  // namespace onetri
