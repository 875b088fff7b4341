#include "onetri/constructions.hpp"

#include <string>

#include "onetri/error.hpp"

namespace onetri {
namespace {

void require_positive(const Rational& value, const char* name) {
  if (sgn(value) <= 0) {
    throw PreconditionError(std::string(name) + " must be positive, got " + value.get_str());
  }
}

Point point(std::initializer_list<Rational> coords) { return Point(std::vector<Rational>(coords)); }

}  // namespace

const char* to_string(Family family) noexcept {
  switch (family) {
    case Family::simplex: return "simplex";
    case Family::rectangle: return "rectangle";
    case Family::iso_tet: return "iso-tet";
    case Family::opp_edge_tet: return "opp-edge-tet";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  std::string key(name);
  for (char& c : key) {
    if (c == '_') c = '-';
  }
  if (key == "simplex") return Family::simplex;
  if (key == "rectangle" || key == "square") return Family::rectangle;
  if (key == "iso-tet") return Family::iso_tet;
  if (key == "opp-edge-tet") return Family::opp_edge_tet;
  throw PreconditionError("unknown construction family '" + std::string(name) + "'");
}

PointConfig regular_simplex(long d) {
  if (d < 1) throw PreconditionError("simplex dimension must be at least 1");
  const auto n = static_cast<std::size_t>(d) + 1;
  std::vector<Point> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> coords(n, Rational(0));
    coords[i] = 1;
    points.emplace_back(std::move(coords));
  }
  return PointConfig(std::move(points));
}

PointConfig rectangle(const Rational& a, const Rational& b) {
  require_positive(a, "rectangle side a");
  require_positive(b, "rectangle side b");
  return PointConfig({point({0, 0}), point({a, 0}), point({0, b}), point({a, b})});
}

PointConfig isosceles_tetrahedron(const Rational& d2, const Rational& h) {
  require_positive(d2, "d2");
  if (sgn(h) < 0) throw PreconditionError("height h must be non-negative, got " + h.get_str());
  const Rational half = d2 / 2;
  return PointConfig({point({half, 0, 0}), point({-half, 0, 0}), point({0, half, h}),
                      point({0, -half, h})});
}

PointConfig opposite_edge_tetrahedron(const Rational& p, const Rational& q, const Rational& r) {
  require_positive(p, "p");
  require_positive(q, "q");
  require_positive(r, "r");
  if (p == q || q == r || p == r) {
    throw PreconditionError("box sides must be pairwise distinct, otherwise the faces are isosceles");
  }
  return PointConfig({point({0, 0, 0}), point({p, q, 0}), point({p, 0, r}), point({0, q, r})});
}

PointConfig construct(const ConstructionParams& params) {
  const auto& v = params.params;
  auto expect = [&](std::size_t count) {
    if (v.size() != count) {
      throw PreconditionError(std::string(to_string(params.family)) + " takes " +
                              std::to_string(count) + " parameter(s), got " +
                              std::to_string(v.size()));
    }
  };
  switch (params.family) {
    case Family::simplex: {
      expect(1);
      if (v[0].get_den() != 1 || !v[0].get_num().fits_slong_p()) {
        throw PreconditionError("simplex dimension must be an integer");
      }
      return regular_simplex(v[0].get_num().get_si());
    }
    case Family::rectangle:
      if (v.size() == 1) return rectangle(v[0], v[0]);
      expect(2);
      return rectangle(v[0], v[1]);
    case Family::iso_tet:
      expect(2);
      return isosceles_tetrahedron(v[0], v[1]);
    case Family::opp_edge_tet:
      expect(3);
      return opposite_edge_tetrahedron(v[0], v[1], v[2]);
  }
  throw PreconditionError("unknown construction family");
}

}  // namespace onetri
