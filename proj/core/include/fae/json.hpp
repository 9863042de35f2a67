#pragma once

#include "fae/bench.hpp"
#include "fae/bounds.hpp"
#include "fae/estimator.hpp"

#include <nlohmann/json.hpp>

namespace fae {

void to_json(nlohmann::json& j, const ConfidenceInterval& ci);
void to_json(nlohmann::json& j, const LedgerSnapshot& ledger);

/// Flat trace record: j, stage, theta_min, theta_max, c_hat, c_lo, c_hi and,
/// in the second stage, s_hat, rho, n_winding.
void to_json(nlohmann::json& j, const IterationRecord& rec);
void to_json(nlohmann::json& j, const IterationCheck& chk);
void to_json(nlohmann::json& j, const DiagnosticsReport& report);

nlohmann::json result_to_json(const EstimationResult& result, bool include_trace);

namespace bounds {
void to_json(nlohmann::json& j, const BoundReport& report);
}

namespace bench {
void to_json(nlohmann::json& j, const BenchConfig& config);
void to_json(nlohmann::json& j, const TrialRecord& rec);
void to_json(nlohmann::json& j, const CellStats& stats);
void to_json(nlohmann::json& j, const ScalingFit& fit);
} // namespace bench

} // namespace fae
