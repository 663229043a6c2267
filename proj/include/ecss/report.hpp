#pragma once

#include <string>

#include <json.hpp>

#include "ecss/graph.hpp"
#include "ecss/local_search.hpp"

namespace ecss {

inline constexpr int kReportSchemaVersion = 1;

/// Extra oracle information that is not part of the solve itself.
enum class OracleStatus { kOff, kSkipped, kSolved, kBudgetExceeded };
std::string to_string(OracleStatus status);

/// JSON form of a solve report (schema in docs/report-schema.md). Numbers
/// are exact integers; ratios are "p/q" strings. Wall-clock time is only
/// included on request so that repeated runs serialise byte-identically.
nlohmann::ordered_json report_json(const Graph& g, const SolveReport& report, OracleStatus oracle,
                                   bool include_timing);

std::string summary_text(const Graph& g, const SolveReport& report, OracleStatus oracle);

}  // namespace ecss
