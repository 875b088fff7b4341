#include "onetri/report.hpp"

#include <algorithm>
#include <set>

#include "onetri/error.hpp"

namespace onetri {
namespace {

Json rationals(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

Json signature_json(const TriangleSignature& s) {
  return Json::array({to_string(s.a), to_string(s.b), to_string(s.c)});
}

Json signature_json(const ApproxTriangleSignature& s) { return Json::array({s.a, s.b, s.c}); }

template <class Scalar>
Json census_json(const BasicCensusReport<Scalar>& report) {
  Json classes = Json::array();
  for (const auto& c : report.triangle_classes) {
    classes.push_back(Json{{"signature", signature_json(c.signature)},
                           {"kind", to_string(c.kind)},
                           {"multiplicity", c.multiplicity}});
  }
  Json distances = Json::array();
  for (const auto& d : report.distinct_distances) {
    if constexpr (std::is_same_v<Scalar, Rational>) {
      distances.push_back(to_string(d));
    } else {
      distances.push_back(d);
    }
  }
  return Json{{"n_points", report.n_points},
              {"distinct_distance_count", report.distinct_distance_count()},
              {"distinct_distances", distances},
              {"triangle_class_count", report.class_count()},
              {"triangle_classes", classes},
              {"degenerate_triples", report.degenerate_triples}};
}

Json check_json(const LabelingCheck& check, const TriangleType& type) {
  return Json{{"labeling", check.labeling.to_string(type)},
              {"values", rationals(check.values)},
              {"realizability", to_json(check.realizability)},
              {"fits", check.fits}};
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

}  // namespace

Json to_json(const CensusReport& report) { return census_json(report); }
Json to_json(const ApproxCensusReport& report) { return census_json(report); }

Json to_json(const RealizabilityReport& report) {
  Json out{{"psd", report.psd}, {"rank", report.rank}};
  out["min_embedding_dim"] = report.min_embedding_dim ? Json(*report.min_embedding_dim) : Json("NOT_REALIZABLE");
  out["witness"] = report.witness ? rationals(*report.witness) : Json(nullptr);
  return out;
}

Json to_json(const EnumerationResult& result) {
  const TriangleType type(result.kind);
  Json reps = Json::array();
  for (const auto& r : result.representatives) reps.push_back(r.to_string(type));
  return Json{{"n", result.n}, {"type", to_string(result.kind)}, {"count", result.count()},
              {"representatives", reps}};
}

Json to_json(const VerificationRecord& record) {
  const TriangleType type(record.kind);
  Json grid = Json::array();
  for (const auto& v : record.value_grid) grid.push_back(rationals(v));
  Json tested = Json::array();
  for (const auto& c : record.tested_checks) tested.push_back(check_json(c, type));
  Json below = Json::array();
  for (const auto& c : record.witness_checks) below.push_back(check_json(c, type));
  Json witnesses = Json::array();
  for (const auto& w : record.witnesses) {
    Json item{{"family", w.family}};
    item["params"] = w.params ? rationals(w.params->params) : Json(nullptr);
    item["embedding_dim"] = w.embedding_dim;
    item["verified"] = w.verified;
    witnesses.push_back(std::move(item));
  }
  return Json{{"dimension", record.dimension},
              {"type", to_string(record.kind)},
              {"value_grid", grid},
              {"tested_points", record.tested_points},
              {"tested_survivors", record.tested_survivors},
              {"tested_checks", tested},
              {"witness_checks", below},
              {"max_points", record.max_points},
              {"witnesses", witnesses}};
}

Json to_json(const SearchConfig& cfg) {
  return Json{{"n", cfg.n},
              {"dim", cfg.dim},
              {"restarts", cfg.restarts},
              {"max_iters", cfg.max_iters},
              {"seed", cfg.seed},
              {"initial_step", cfg.initial_step},
              {"shrink", cfg.shrink},
              {"grow", cfg.grow},
              {"degeneracy_margin", cfg.degeneracy_margin},
              {"gradient_tolerance", cfg.gradient_tolerance},
              {"step_tolerance", cfg.step_tolerance},
              {"defect_floor", cfg.defect_floor}};
}

Json to_json(const DefectResult& result) {
  Json restarts = Json::array();
  for (const auto& r : result.per_restart) {
    restarts.push_back(Json{{"seed", r.seed}, {"final_defect", r.final_defect}, {"iterations", r.iterations}});
  }
  Json config = Json::array();
  for (Eigen::Index i = 0; i < result.best_config.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < result.best_config.cols(); ++k) row.push_back(result.best_config(i, k));
    config.push_back(std::move(row));
  }
  return Json{{"best_defect", result.best_defect},
              {"best_config", config},
              {"iterations_used", result.iterations_used},
              {"per_restart", restarts}};
}

Json make_report(const std::string& command, const std::string& inputs_digest, Json payload) {
  return Json{{"command", command},
              {"version", kVersion},
              {"inputs_digest", inputs_digest},
              {"payload", std::move(payload)}};
}

std::string dump_report(const Json& report) { return report.dump(2) + "\n"; }

VerifySummary run_verify(std::size_t d_min, std::size_t d_max) {
  if (d_min < kMinVerifyDimension || d_max > kMaxVerifyDimension || d_min > d_max) {
    throw PreconditionError("verify range must satisfy " + std::to_string(kMinVerifyDimension) +
                            " <= dmin <= dmax <= " + std::to_string(kMaxVerifyDimension));
  }
  VerifySummary summary;
  summary.pass = true;
  for (std::size_t d = d_min; d <= d_max; ++d) {
    for (TriangleKind kind : {TriangleKind::equilateral, TriangleKind::isosceles, TriangleKind::scalene}) {
      VerifyRow row{d, kind, 0, {}, 0, {}, false, verify_bound(d, kind, default_value_grid(kind))};
      row.max_points = row.record.max_points;
      for (const auto& w : row.record.witnesses) {
        if (w.verified) row.witness_families.push_back(w.family);
      }
      switch (kind) {
        case TriangleKind::equilateral:
          row.expected_max_points = d + 1;
          row.expected_families = {"simplex"};
          break;
        case TriangleKind::isosceles:
          row.expected_max_points = 4;
          row.expected_families = {"iso-tet", "square"};
          break;
        case TriangleKind::scalene:
          row.expected_max_points = 4;
          row.expected_families = {"opp-edge-tet", "rectangle"};
          break;
      }
      std::vector<std::string> got = row.witness_families;
      std::sort(got.begin(), got.end());
      row.matches = row.max_points == row.expected_max_points && got == row.expected_families;
      summary.pass = summary.pass && row.matches;
      summary.rows.push_back(std::move(row));
    }
  }
  return summary;
}

Json to_json(const VerifySummary& summary) {
  Json grids = Json::object();
  for (TriangleKind kind : {TriangleKind::equilateral, TriangleKind::isosceles, TriangleKind::scalene}) {
    Json g = Json::array();
    for (const auto& v : default_value_grid(kind)) g.push_back(rationals(v));
    grids[to_string(kind)] = g;
  }
  Json rows = Json::array();
  for (const auto& row : summary.rows) {
    rows.push_back(Json{{"dimension", row.dimension},
                        {"type", to_string(row.kind)},
                        {"max_points", row.max_points},
                        {"witness", join(row.witness_families, "/")},
                        {"expected_max_points", row.expected_max_points},
                        {"matches", row.matches},
                        {"detail", to_json(row.record)}});
  }
  return Json{{"value_grid", grids}, {"rows", rows}, {"verdict", summary.pass ? "PASS" : "FAIL"}};
}

}  // namespace onetri
