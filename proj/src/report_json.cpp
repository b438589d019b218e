#include "graphpow/report_json.hpp"

#include <cstdio>

namespace graphpow {

namespace {

std::string decimal_display(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", r.to_double());
    return buf;
}

}  // namespace

Json rational_json(const Rational& r) {
    return Json{{"num", r.num()}, {"den", r.den()}, {"display", decimal_display(r)}};
}

Json bound_report_json(const BoundReport& r) {
    Json hyps = Json::array();
    for (const auto& h : r.hypotheses) hyps.push_back(Json{{"name", h.name}, {"satisfied", h.satisfied}});
    Json params = Json::object();
    if (r.params.d) params["d"] = *r.params.d;
    if (r.params.k) params["k"] = *r.params.k;
    if (r.params.n) params["n"] = *r.params.n;
    if (r.params.diameter) params["diameter"] = *r.params.diameter;
    return Json{
        {"type", "bound_report"},
        {"theorem", theorem_name(r.theorem_id)},
        {"params", params},
        {"hypotheses", hyps},
        {"lhs_times_scale", r.lhs_times_scale},
        {"rhs_times_scale", r.rhs_times_scale},
        {"scale", r.scale},
        {"scale_description", r.scale_description},
        {"verdict", verdict_name(r.verdict)},
        {"slack", rational_json(r.slack)},
    };
}

namespace {

Json sub_check_json(const PerVertexSubCheck& c) {
    Json j{{"name", c.name}, {"applicable", c.applicable}, {"pass", c.pass}};
    if (c.witness) j["witness"] = *c.witness;
    return j;
}

}  // namespace

Json per_vertex_report_json(const PerVertexReport& r) {
    return Json{
        {"type", "per_vertex_report"},
        {"net_degree", sub_check_json(r.net_degree)},
        {"fourth_power_2d", sub_check_json(r.fourth_power_2d)},
        {"distant_pair_3d", sub_check_json(r.distant_pair_3d)},
        {"all_pass", r.all_pass()},
    };
}

Json cert_build_json(const NetBuildResult& r) {
    Json hyps = Json::array();
    for (const auto& h : r.hypotheses) hyps.push_back(Json{{"name", h.name}, {"satisfied", h.satisfied}});
    Json j{
        {"type", "certificate"},
        {"hypotheses", hyps},
        {"hypotheses_met", r.hypotheses_met},
    };
    if (r.certificate) {
        const NetCertificate& c = *r.certificate;
        j["k_prime"] = c.k_prime;
        j["exponent"] = 3 * c.k_prime + 2;
        j["h_connected"] = r.h_connected;
        j["seed_geodesic"] = c.seed_geodesic;
        j["x0"] = c.x0;
        j["x"] = c.x;
        j["z_size"] = c.z.size();
        j["y_size"] = c.y.size();
        j["claim1"] = Json{{"lhs_e_zz", c.claim1_lhs}, {"rhs_times2", c.claim1_rhs_times2}};
        j["claim2"] = Json{{"lhs_e_zy", c.claim2_lhs}, {"rhs", c.claim2_rhs}};
        j["claim3"] = Json{{"min_degree", c.claim3_min_degree}, {"rhs", c.claim3_rhs}};
        j["final"] = Json{{"degree_sum", c.final_lhs}, {"rhs", c.final_rhs}};
    }
    return j;
}

Json cert_report_json(const CertReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json j{{"name", c.name}, {"pass", c.pass}};
        if (!c.pass && !c.detail.empty()) j["detail"] = c.detail;
        checks.push_back(j);
    }
    return Json{{"type", "certificate_audit"}, {"checks", checks}, {"all_pass", r.all_pass}};
}

Json run_report_json(const RunReport& r) {
    return Json{
        {"type", "run_report"},
        {"command", r.command},
        {"inputs", r.inputs},
        {"counts",
         Json{{"checked", r.checked},
              {"holds", r.holds},
              {"hypotheses_unmet", r.hypotheses_unmet},
              {"failures", r.failures}}},
        {"wall_time_ms", r.wall_time_ms},
    };
}

}  // namespace graphpow
