#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "onetri/combinatorics.hpp"
#include "onetri/constructions.hpp"
#include "onetri/error.hpp"
#include "onetri/geometry.hpp"
#include "onetri/realizability.hpp"
#include "onetri/report.hpp"
#include "onetri/search.hpp"

namespace py = pybind11;

// Rational <-> fractions.Fraction. Accepts int, Fraction, float (exactly) and
// "p/q" or decimal strings on the way in.
namespace pybind11::detail {
template <>
struct type_caster<mpq_class> {
  PYBIND11_TYPE_CASTER(mpq_class, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src) return false;
    try {
      if (py::isinstance<py::str>(src)) {
        value = onetri::parse_rational(src.cast<std::string>());
        return true;
      }
      if (py::isinstance<py::bool_>(src)) return false;
      py::object frac = py::module_::import("fractions").attr("Fraction")(src);
      const auto num = py::str(frac.attr("numerator")).cast<std::string>();
      const auto den = py::str(frac.attr("denominator")).cast<std::string>();
      value = mpq_class(mpz_class(num), mpz_class(den));
      value.canonicalize();
      return true;
    } catch (const std::exception&) {
      PyErr_Clear();
      return false;
    }
  }

  static handle cast(const mpq_class& src, return_value_policy, handle) {
    return py::module_::import("fractions").attr("Fraction")(src.get_str()).release();
  }
};
}  // namespace pybind11::detail

namespace {

using namespace onetri;
using Rows = std::vector<std::vector<Rational>>;

PointConfig to_config(const Rows& rows) {
  std::vector<Point> pts;
  pts.reserve(rows.size());
  for (const auto& r : rows) pts.emplace_back(r);
  return PointConfig(std::move(pts));
}

Rows to_rows(const PointConfig& cfg) {
  Rows out;
  for (const auto& p : cfg.points()) out.emplace_back(p.coords().begin(), p.coords().end());
  return out;
}

SquaredDistanceMatrix to_matrix(const Rows& rows) {
  std::vector<Rational> flat;
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw DimensionMismatch("distance matrix must be square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return SquaredDistanceMatrix(rows.size(), std::move(flat));
}

py::object json_to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

template <typename Scalar>
void bind_census(py::module_& m, const char* sig_name, const char* class_name, const char* report_name) {
  using Sig = BasicTriangleSignature<Scalar>;
  py::class_<Sig>(m, sig_name)
      .def_readonly("a", &Sig::a)
      .def_readonly("b", &Sig::b)
      .def_readonly("c", &Sig::c)
      .def("__iter__", [](const Sig& s) { return py::iter(py::make_tuple(s.a, s.b, s.c)); })
      .def("__eq__", [](const Sig& x, const Sig& y) { return x == y; })
      .def("__repr__", [sig_name](const Sig& s) {
        return std::string(sig_name) + std::string(py::repr(py::make_tuple(s.a, s.b, s.c)));
      });
  using Cls = TriangleClass<Scalar>;
  py::class_<Cls>(m, class_name)
      .def_readonly("signature", &Cls::signature)
      .def_readonly("kind", &Cls::kind)
      .def_readonly("multiplicity", &Cls::multiplicity);
  using Rep = BasicCensusReport<Scalar>;
  py::class_<Rep>(m, report_name)
      .def_readonly("n_points", &Rep::n_points)
      .def_readonly("distinct_distances", &Rep::distinct_distances)
      .def_readonly("triangle_classes", &Rep::triangle_classes)
      .def_readonly("degenerate_triples", &Rep::degenerate_triples)
      .def_property_readonly("distinct_distance_count", &Rep::distinct_distance_count)
      .def_property_readonly("class_count", &Rep::class_count)
      .def("to_json", [](const Rep& r) { return json_to_python(to_json(r)); });
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact triangle census, realizability and one-triangle search";
  m.attr("__version__") = std::string(kVersion);

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  auto pre = py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", pre.ptr());
  py::register_exception<DegenerateTriangle>(m, "DegenerateTriangle", pre.ptr());
  py::register_exception<NotRealizable>(m, "NotRealizable", base.ptr());
  py::register_exception<ResidualTooLarge>(m, "ResidualTooLarge", base.ptr());
  py::register_exception<NonDifferentiable>(m, "NonDifferentiable", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", pre.ptr());

  py::enum_<TriangleKind>(m, "TriangleKind")
      .value("EQUILATERAL", TriangleKind::equilateral)
      .value("ISOSCELES", TriangleKind::isosceles)
      .value("SCALENE", TriangleKind::scalene);

  bind_census<Rational>(m, "TriangleSignature", "TriangleClass", "CensusReport");
  bind_census<double>(m, "ApproxTriangleSignature", "ApproxTriangleClass", "ApproxCensusReport");

  m.def("census", [](const Rows& points) { return census(to_config(points)); }, py::arg("points"),
        "Exact census of a point set given as rows of rationals.");
  m.def("epsilon_census", &epsilon_census, py::arg("points"), py::arg("eps"));
  m.def("distance_matrix", [](const Rows& points) {
    const auto d = distance_matrix(to_config(points));
    Rows out(d.size(), std::vector<Rational>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = 0; j < d.size(); ++j) out[i][j] = d(i, j);
    return out;
  });
  m.def("triangle_signature", &triangle_signature, py::arg("a"), py::arg("b"), py::arg("c"));
  m.def(
      "squared_circumradius",
      [](const Rational& a, const Rational& b, const Rational& c) {
        return squared_circumradius(triangle_signature(a, b, c));
      },
      py::arg("a"), py::arg("b"), py::arg("c"));

  py::class_<RealizabilityReport>(m, "RealizabilityReport")
      .def_readonly("psd", &RealizabilityReport::psd)
      .def_readonly("rank", &RealizabilityReport::rank)
      .def_readonly("min_embedding_dim", &RealizabilityReport::min_embedding_dim)
      .def_readonly("witness", &RealizabilityReport::witness)
      .def("realizable_in", &RealizabilityReport::realizable_in, py::arg("dim"));
  m.def("embedding_dimension", [](const Rows& d) { return embedding_dimension(to_matrix(d)); }, py::arg("matrix"));
  m.def(
      "realize_coordinates",
      [](const Rows& d, std::size_t dim) {
        const auto r = realize_coordinates(to_matrix(d), dim);
        return py::make_tuple(r.points, r.max_relative_residual);
      },
      py::arg("matrix"), py::arg("dim"), "Returns (points, max_relative_residual).");

  m.def(
      "enumerate_labelings",
      [](std::size_t n, TriangleKind kind) {
        const auto result = enumerate_one_triangle_labelings(n, kind);
        std::vector<std::string> out;
        for (const auto& rep : result.representatives) out.push_back(rep.to_string(TriangleType(kind)));
        return out;
      },
      py::arg("n"), py::arg("kind"), "Canonical one-triangle labelings of K_n, one string per class.");

  m.def(
      "construct",
      [](const std::string& family, const std::vector<Rational>& params) {
        return to_rows(construct({parse_family(family), params}));
      },
      py::arg("family"), py::arg("params"));

  py::class_<SearchConfig>(m, "SearchConfig")
      .def(py::init<>())
      .def_readwrite("n", &SearchConfig::n)
      .def_readwrite("dim", &SearchConfig::dim)
      .def_readwrite("restarts", &SearchConfig::restarts)
      .def_readwrite("max_iters", &SearchConfig::max_iters)
      .def_readwrite("seed", &SearchConfig::seed)
      .def_readwrite("initial_step", &SearchConfig::initial_step)
      .def_readwrite("shrink", &SearchConfig::shrink)
      .def_readwrite("grow", &SearchConfig::grow)
      .def_readwrite("degeneracy_margin", &SearchConfig::degeneracy_margin)
      .def_readwrite("gradient_tolerance", &SearchConfig::gradient_tolerance)
      .def_readwrite("step_tolerance", &SearchConfig::step_tolerance)
      .def_readwrite("defect_floor", &SearchConfig::defect_floor);
  py::class_<RestartOutcome>(m, "RestartOutcome")
      .def_readonly("seed", &RestartOutcome::seed)
      .def_readonly("final_defect", &RestartOutcome::final_defect)
      .def_readonly("iterations", &RestartOutcome::iterations);
  py::class_<DefectResult>(m, "DefectResult")
      .def_readonly("best_defect", &DefectResult::best_defect)
      .def_readonly("best_config", &DefectResult::best_config)
      .def_readonly("per_restart", &DefectResult::per_restart)
      .def_readonly("iterations_used", &DefectResult::iterations_used);
  m.def("triangle_defect", &triangle_defect, py::arg("points"), py::arg("margin") = SearchConfig{}.degeneracy_margin);
  m.def("defect_gradient", &defect_gradient, py::arg("points"), py::arg("margin") = SearchConfig{}.degeneracy_margin);
  m.def("minimize_defect", &minimize_defect, py::arg("config"), py::call_guard<py::gil_scoped_release>());
  m.def(
      "snap_and_census",
      [](const Coordinates& points, double eps, double margin) {
        const auto s = snap_and_census(points, eps, margin);
        return py::make_tuple(s.census, s.defect);
      },
      py::arg("points"), py::arg("eps"), py::arg("margin") = SearchConfig{}.degeneracy_margin,
      "Returns (census, defect).");

  m.def(
      "verify", [](std::size_t dmin, std::size_t dmax) { return json_to_python(to_json(run_verify(dmin, dmax))); },
      py::arg("dmin") = 3, py::arg("dmax") = 8, "Verification table as a dict with rows and a PASS/FAIL verdict.");
}
