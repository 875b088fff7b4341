// onetri: exact census, realizability, enumeration and search for point sets
// determining a single distinct triangle.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "onetri/combinatorics.hpp"
#include "onetri/constructions.hpp"
#include "onetri/error.hpp"
#include "onetri/io.hpp"
#include "onetri/realizability.hpp"
#include "onetri/report.hpp"
#include "onetri/search.hpp"

namespace {

using namespace onetri;

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kPrecondition = 2,
  kVerifyFailed = 3,
  kNotRealizable = 4,
  kEmptyInput = 10,
  kMalformedLiteral = 11,
  kRaggedArity = 12,
  kDuplicatePoint = 13,
  kBadHeader = 14,
};

int exit_code(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::empty_input: return kEmptyInput;
    case ParseErrorKind::malformed_literal: return kMalformedLiteral;
    case ParseErrorKind::ragged_arity: return kRaggedArity;
    case ParseErrorKind::duplicate_point: return kDuplicatePoint;
    case ParseErrorKind::bad_header: return kBadHeader;
  }
  return kInternal;
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

// SHA-256 over the command line options and input bytes, NUL separated.
std::string digest(const std::vector<std::string>& parts) {
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  for (const auto& part : parts) {
    EVP_DigestUpdate(ctx, part.data(), part.size());
    EVP_DigestUpdate(ctx, "\0", 1);
  }
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, md, &len);
  EVP_MD_CTX_free(ctx);
  static const char* hex = "0123456789abcdef";
  std::string out = "sha256:";
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 0xf];
  }
  return out;
}

std::string fmt_double(double v) {
  std::ostringstream ss;
  ss.precision(17);
  ss << v;
  return ss.str();
}

void emit(const Json& report) { std::cout << dump_report(report); }

TriangleKind parse_kind(const std::string& s) {
  if (s == "eq" || s == "equilateral") return TriangleKind::equilateral;
  if (s == "iso" || s == "isosceles") return TriangleKind::isosceles;
  if (s == "sca" || s == "scalene") return TriangleKind::scalene;
  throw PreconditionError("unknown triangle type '" + s + "' (use eq, iso or sca)");
}

std::vector<Rational> parse_csv(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      out.push_back(parse_rational(item));
    } catch (const std::invalid_argument& e) {
      throw PreconditionError(e.what());
    }
  }
  return out;
}

Json points_json(const Coordinates& x) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < x.cols(); ++k) row.push_back(x(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

int cmd_census(const std::string& path, double eps, bool eps_given) {
  const std::string text = read_input(path);
  std::istringstream in(text);
  const PointConfig cfg = parse_points(in);
  Json payload;
  if (eps_given) {
    payload = Json{{"mode", "epsilon"}, {"eps", eps}, {"census", to_json(epsilon_census(to_coordinates(cfg), eps))}};
  } else {
    payload = Json{{"mode", "exact"}, {"census", to_json(census(cfg))}};
  }
  emit(make_report("census", digest({"census", eps_given ? fmt_double(eps) : "exact", text}), payload));
  return kOk;
}

int cmd_realize(const std::string& path, std::size_t dim, bool as_points) {
  const std::string text = read_input(path);
  std::istringstream in(text);
  const SquaredDistanceMatrix d = as_points ? distance_matrix(parse_points(in)) : parse_distance_matrix(in);
  const RealizabilityReport report = embedding_dimension(d);
  Json payload{{"n", d.size()}, {"target_dim", dim}, {"realizability", to_json(report)}};
  int code = kOk;
  try {
    const Realization r = realize_coordinates(d, dim);
    payload["realizable"] = true;
    payload["max_relative_residual"] = r.max_relative_residual;
    payload["points"] = points_json(r.points);
    payload["points_text"] = format_points(r.points);
  } catch (const NotRealizable& e) {
    payload["realizable"] = false;
    payload["error"] = e.what();
    code = kNotRealizable;
  } catch (const ResidualTooLarge& e) {
    payload["realizable"] = false;
    payload["max_relative_residual"] = e.residual();
    payload["error"] = e.what();
    code = kNotRealizable;
  }
  emit(make_report("realize", digest({"realize", std::to_string(dim), as_points ? "points" : "matrix", text}),
                   payload));
  return code;
}

int cmd_enumerate(std::size_t n, const std::string& type) {
  const EnumerationResult result = enumerate_one_triangle_labelings(n, parse_kind(type));
  emit(make_report("enumerate", digest({"enumerate", std::to_string(n), type}), to_json(result)));
  return kOk;
}

int cmd_construct(const std::string& family, const std::string& params) {
  const PointConfig cfg = construct({parse_family(family), parse_csv(params)});
  std::cout << format_points(cfg);
  return kOk;
}

int cmd_search(const SearchConfig& cfg, double eps, const std::string& points_out) {
  const DefectResult result = minimize_defect(cfg);
  Json payload{{"config", to_json(cfg)}, {"result", to_json(result)}};
  try {
    const SnapResult snap = snap_and_census(result.best_config, eps, cfg.degeneracy_margin);
    payload["snap"] = Json{{"eps", eps}, {"defect", snap.defect}, {"census", to_json(snap.census)}};
  } catch (const PreconditionError& e) {
    payload["snap"] = Json{{"eps", eps}, {"error", e.what()}};
  }
  const std::string text = format_points(result.best_config);
  payload["best_config_points"] = text;
  if (!points_out.empty()) {
    std::ofstream out(points_out, std::ios::binary);
    if (!out) throw PreconditionError("cannot write '" + points_out + "'");
    out << text;
  }
  emit(make_report("search", digest({"search", to_json(cfg).dump(), fmt_double(eps)}), payload));
  return kOk;
}

int cmd_verify(std::size_t dmin, std::size_t dmax) {
  const VerifySummary summary = run_verify(dmin, dmax);
  emit(make_report("verify", digest({"verify", std::to_string(dmin), std::to_string(dmax)}), to_json(summary)));
  return summary.pass ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"onetri: point configurations determining exactly one distinct triangle"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string census_file;
  double census_eps = 0.0;
  auto* census_cmd = app.add_subcommand("census", "distinct-triangle census of a point file");
  census_cmd->add_option("file", census_file, "point-set file ('-' for stdin)")->required();
  auto* eps_opt = census_cmd->add_option("--eps", census_eps, "relative tolerance; switches to the floating-point census");

  std::string realize_file;
  std::size_t realize_dim = 0;
  bool realize_points = false;
  auto* realize_cmd = app.add_subcommand("realize", "Euclidean realizability of a squared-distance matrix");
  realize_cmd->add_option("file", realize_file, "matrix file: n, then the upper triangle row by row")->required();
  realize_cmd->add_option("--dim", realize_dim, "target dimension")->required();
  realize_cmd->add_flag("--points", realize_points, "read a point-set file instead of a matrix");

  std::size_t enum_n = 0;
  std::string enum_type;
  auto* enum_cmd = app.add_subcommand("enumerate", "one-triangle edge labelings of K_n up to vertex relabeling");
  enum_cmd->add_option("--n", enum_n, "vertex count, 3..7")->required();
  enum_cmd->add_option("--type", enum_type, "eq, iso or sca")->required();

  std::string family;
  std::string params;
  auto* construct_cmd = app.add_subcommand(
      "construct", "emit an optimal configuration in point-set format");
  construct_cmd->add_option("--family", family, "simplex | rectangle | square | iso-tet | opp-edge-tet")->required();
  construct_cmd->add_option("--params", params, "comma-separated rationals: d | a,b | a | d2,h | p,q,r")->required();

  SearchConfig search_cfg;
  double search_eps = 1e-5;
  std::string points_out;
  auto* search_cmd = app.add_subcommand("search", "random-restart descent on the one-triangle defect");
  search_cmd->add_option("--n", search_cfg.n, "points")->capture_default_str();
  search_cmd->add_option("--dim", search_cfg.dim, "dimension")->capture_default_str();
  search_cmd->add_option("--restarts", search_cfg.restarts)->capture_default_str();
  search_cmd->add_option("--max-iters", search_cfg.max_iters)->capture_default_str();
  search_cmd->add_option("--seed", search_cfg.seed)->capture_default_str();
  search_cmd->add_option("--step", search_cfg.initial_step, "initial step length")->capture_default_str();
  search_cmd->add_option("--shrink", search_cfg.shrink, "backtracking factor")->capture_default_str();
  search_cmd->add_option("--grow", search_cfg.grow, "step growth after acceptance")->capture_default_str();
  search_cmd->add_option("--margin", search_cfg.degeneracy_margin, "degeneracy margin on 16A^2/s^2")->capture_default_str();
  search_cmd->add_option("--gtol", search_cfg.gradient_tolerance)->capture_default_str();
  search_cmd->add_option("--step-tol", search_cfg.step_tolerance)->capture_default_str();
  search_cmd->add_option("--floor", search_cfg.defect_floor, "stop once the defect drops below this")->capture_default_str();
  search_cmd->add_option("--eps", search_eps, "tolerance for the census of the best configuration")->capture_default_str();
  search_cmd->add_option("--points-out", points_out, "also write the best configuration here");

  std::size_t dmin = 3, dmax = 3;
  auto* verify_cmd = app.add_subcommand(
      "verify",
      "check the one-triangle maxima for each dimension in range.\n"
      "Value grids (squared side lengths per label): equilateral {2}; isosceles (d1^2,d2^2) in "
      "{(2,4),(3,4)}; scalene (d1^2,d2^2,d3^2) in {(5,10,13),(13,40,45),(9,16,25)}.");
  verify_cmd->add_option("--dmin", dmin)->capture_default_str();
  verify_cmd->add_option("--dmax", dmax)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kPrecondition;
  }

  try {
    if (*census_cmd) return cmd_census(census_file, census_eps, eps_opt->count() > 0);
    if (*realize_cmd) return cmd_realize(realize_file, realize_dim, realize_points);
    if (*enum_cmd) return cmd_enumerate(enum_n, enum_type);
    if (*construct_cmd) return cmd_construct(family, params);
    if (*search_cmd) return cmd_search(search_cfg, search_eps, points_out);
    if (*verify_cmd) return cmd_verify(dmin, dmax);
  } catch (const ParseError& e) {
    std::cerr << "onetri: parse error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const PreconditionError& e) {
    std::cerr << "onetri: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "onetri: internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
