#ifndef GRAPHPOW_REPORT_JSON_HPP
#define GRAPHPOW_REPORT_JSON_HPP

#include <string>

#include <json.hpp>

#include "graphpow/bounds.hpp"
#include "graphpow/proof_cert.hpp"
#include "graphpow/rational.hpp"

namespace graphpow {

// Aggregate record for one CLI invocation.
struct RunReport {
    std::string command;
    std::string inputs;
    long long checked = 0;
    long long holds = 0;
    long long hypotheses_unmet = 0;
    long long failures = 0;
    long long wall_time_ms = 0;
};

// Line-delimited record rendering. All arithmetic fields are integer pairs;
// the only decimal is a display-only string.
using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r);
Json bound_report_json(const BoundReport& r);
Json per_vertex_report_json(const PerVertexReport& r);
Json cert_build_json(const NetBuildResult& r);
Json cert_report_json(const CertReport& r);
Json run_report_json(const RunReport& r);

}  // namespace graphpow

#endif
