#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "onetri/combinatorics.hpp"
#include "onetri/geometry.hpp"
#include "onetri/realizability.hpp"
#include "onetri/search.hpp"

namespace onetri {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

Json to_json(const CensusReport& report);
Json to_json(const ApproxCensusReport& report);
Json to_json(const RealizabilityReport& report);
Json to_json(const EnumerationResult& result);
Json to_json(const VerificationRecord& record);
Json to_json(const DefectResult& result);
Json to_json(const SearchConfig& cfg);

/// Envelope shared by every command; field order is fixed.
Json make_report(const std::string& command, const std::string& inputs_digest, Json payload);

/// Serialized report text: two-space indentation, trailing newline.
std::string dump_report(const Json& report);

struct VerifyRow {
  std::size_t dimension;
  TriangleKind kind;
  std::size_t max_points;
  std::vector<std::string> witness_families;
  std::size_t expected_max_points;
  std::vector<std::string> expected_families;
  bool matches;
  VerificationRecord record;
};

struct VerifySummary {
  std::vector<VerifyRow> rows;
  bool pass = false;
};

/// Runs verify_bound for every dimension in [d_min, d_max] and all three
/// triangle types on the default grids, comparing each row against the
/// classification: equilateral tops out at d+1 via the simplex, the others at 4
/// via square/iso-tet and rectangle/opp-edge-tet.
VerifySummary run_verify(std::size_t d_min, std::size_t d_max);

Json to_json(const VerifySummary& summary);

}  // namespace onetri
