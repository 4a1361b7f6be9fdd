#pragma once

#include <json.hpp>

#include "clawdec/connectivity.hpp"
#include "clawdec/property_report.hpp"
#include "clawdec/star_decomposition.hpp"
#include "clawdec/survey.hpp"

namespace clawdec {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportVersion = "clawdec-report/1";

Json vertex_set_json(const VertexSet& s);
VertexSet vertex_set_from_json(const Json& j);

// {"decision": "decomposable", "k", "stars": [{"center", "edges": [[u,v],...]}]}
// {"decision": "not-decomposable", "k", "certificate": {"kind", "witness",
//   "required", "candidates_examined", "failing_examples"}}
Json decision_json(const Graph& g, const Decision& d);

// Inverse of decision_json against the same graph. Star edges are matched
// to unused edge indices with the same endpoints. Throws MalformedFile.
Decision decision_from_json(const Graph& g, const Json& j);

Json orientation_json(const Orientation& o);
Json violating_set_json(const ViolatingSet& s);
Json cut_json(const CutCertificate& c);
Json property_report_json(const PropertyReport& r);
Json survey_report_json(const SurveyReport& r);

// Envelope written by the command-line tool.
Json run_report(const std::string& command, Json inputs, Json outcome, double wall_seconds);

}  // namespace clawdec
