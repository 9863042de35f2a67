#include "fae/json.hpp"

namespace fae {

using nlohmann::json;

void to_json(json& j, const ConfidenceInterval& ci) {
    j = json{{"lo", ci.lo}, {"hi", ci.hi}, {"delta_c", ci.delta_c}};
}

void to_json(json& j, const LedgerSnapshot& ledger) {
    j = json{{"exact_q_calls", ledger.exact_q_calls},
             {"paper_q_calls", ledger.paper_q_calls},
             {"state_preparations", ledger.state_preparations}};
}

void to_json(json& j, const IterationRecord& rec) {
    j = json{{"j", rec.j},
             {"stage", to_string(rec.stage)},
             {"theta_min", rec.theta_min},
             {"theta_max", rec.theta_max},
             {"c_hat", rec.c_hat},
             {"c_lo", rec.c_interval.lo},
             {"c_hi", rec.c_interval.hi}};
    if (rec.s_hat) j["s_hat"] = *rec.s_hat;
    if (rec.rho) j["rho"] = *rec.rho;
    if (rec.n_winding) j["n_winding"] = *rec.n_winding;
}

void to_json(json& j, const IterationCheck& chk) {
    j = json{{"j", chk.j},
             {"stage", to_string(chk.stage)},
             {"covered", chk.covered},
             {"delta_c", chk.delta_c},
             {"cos_errors_ok", chk.cos_errors_ok},
             {"passed", chk.passed()}};
    if (chk.delta_c_shifted) j["delta_c_shifted"] = *chk.delta_c_shifted;
    if (chk.first_stage_sound) j["first_stage_sound"] = *chk.first_stage_sound;
    if (chk.rho_true) j["rho_true"] = *chk.rho_true;
    if (chk.rho_distance) j["rho_distance"] = *chk.rho_distance;
    if (chk.rho_within) j["rho_within"] = *chk.rho_within;
    if (chk.winding_unique) j["winding_unique"] = *chk.winding_unique;
    if (chk.winding_correct) j["winding_correct"] = *chk.winding_correct;
}

void to_json(json& j, const DiagnosticsReport& report) {
    j = json{{"iterations", report.iterations},
             {"final_covered", report.final_covered},
             {"all_passed", report.all_passed}};
    if (report.delta_nu) j["delta_nu"] = *report.delta_nu;
    if (report.nu_ok) j["nu_ok"] = *report.nu_ok;
    if (report.first_uncovered_j) j["first_uncovered_j"] = *report.first_uncovered_j;
    if (report.first_failing_j) j["first_failing_j"] = *report.first_failing_j;
}

json result_to_json(const EstimationResult& result, bool include_trace) {
    json j{{"theta_hat", result.theta_hat},
           {"amplitude_hat", result.amplitude_hat},
           {"j0", result.j0},
           {"first_stage_only", result.first_stage_only()},
           {"ledger", result.ledger},
           {"success_prob_bound", result.success_prob_bound}};
    j["nu"] = result.nu ? json(*result.nu) : json(nullptr);
    if (include_trace) j["trace"] = result.trace;
    return j;
}

namespace bounds {

void to_json(json& j, const BoundReport& r) {
    j = json{{"epsilon", r.epsilon},
             {"delta", r.delta},
             {"ell", r.ell},
             {"delta_c", r.delta_c},
             {"fae_bound", r.fae_bound},
             {"worst_case_count", r.worst_case_count},
             {"competitor_bound", r.competitor_bound},
             {"competitor_ratio", r.competitor_bound / r.fae_bound}};
}

} // namespace bounds

namespace bench {

void to_json(json& j, const BenchConfig& c) {
    j = json{{"amplitudes", c.amplitudes},
             {"ell_min", c.ell_min},
             {"ell_max", c.ell_max},
             {"trials", c.trials},
             {"delta_c", c.delta_c},
             {"seed", c.master_seed},
             {"percentile", c.percentile},
             {"initial_bound", c.initial_bound == InitialBound::Rounded ? "rounded" : "safe"}};
}

void to_json(json& j, const TrialRecord& r) {
    j = json{{"trial", r.trial},
             {"amplitude_hat", r.amplitude_hat},
             {"error", r.error},
             {"exact_q_calls", r.exact_q_calls},
             {"paper_q_calls", r.paper_q_calls},
             {"j0", r.j0},
             {"covered", r.covered},
             {"diagnostics_pass", r.diagnostics_pass},
             {"failed", r.failed}};
    if (r.failed) j["failure"] = r.failure;
}

void to_json(json& j, const CellStats& s) {
    j = json{{"amplitude", s.amplitude},
             {"ell", s.ell},
             {"j0_mode", s.j0_mode},
             {"trials", s.trials},
             {"delta_c", s.delta_c},
             {"err_q95", s.err_q},
             {"n_orac_exact_median", s.n_orac_exact_median},
             {"n_orac_exact_min", s.n_orac_exact_min},
             {"n_orac_exact_max", s.n_orac_exact_max},
             {"n_orac_paper_median", s.n_orac_paper_median},
             {"coverage_rate", s.coverage_rate},
             {"seed", s.seed},
             {"first_stage_only", s.first_stage_only()}};
}

void to_json(json& j, const ScalingFit& f) {
    j = json{{"intercept_b", f.intercept_b},
             {"residual_rms", f.residual_rms},
             {"free_slope", f.free_slope},
             {"free_intercept", f.free_intercept},
             {"points", f.points}};
}

} // namespace bench

} // namespace fae
