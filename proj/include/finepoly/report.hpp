#pragma once

// JSON and text renderings of an AnalysisReport.
//
// Every rational and every lattice coordinate is written as a string ("3",
// "-7/2") so no consumer loses precision. Keys come out in a fixed order and
// the output is byte-identical for identical reports.

#include <string>

#include <json.hpp>

#include "finepoly/invariants.hpp"

namespace finepoly {

using Json = nlohmann::ordered_json;

Json report_to_json(const AnalysisReport& r);

/// Inverse of report_to_json; throws InputError on schema violations.
AnalysisReport report_from_json(const Json& j);

/// Two-column table, one quantity per line.
std::string report_to_text(const AnalysisReport& r);

}  // namespace finepoly
