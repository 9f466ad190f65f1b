#pragma once

#include "pubsim/model.hpp"

#include <array>
#include <span>
#include <vector>

namespace pubsim {

/// One (tier, load) row of the closed-form calibration table.
struct CalibrationRow {
    Tier tier = Tier::T1;
    double load = 1.0;
    double desk_reject_effective = 0.0;
    double overall_review_acceptance = 0.0;
    double eventual_acceptance = 0.0;
};

/// Desk rejection rate under external load: 1 - (1 - p_baseline) / load.
/// Holds review throughput constant: (1 - p(L)) * L == 1 - p_baseline.
/// Throws std::invalid_argument for load < 1 or p outside [0, 1].
double load_adjusted_desk_rate(double p_baseline, double load);

/// Overall acceptance probability conditional on entering review:
/// a1 + m1*(a2 + m2*(a3 + m3)). The a3 + m3 term encodes the kind-world
/// rule (round-3 major revision counts as acceptance).
double overall_review_acceptance(const std::array<RoundOutcomeProbs, 3>& rounds);

/// End-to-end acceptance probability per submission: C * (1 - desk_reject).
double eventual_acceptance_rate(double overall_c, double desk_reject);

/// Time-free acceptance probabilities of the submission ladder, used as the
/// analytic oracle for the Monte Carlo engine. Ignores all durations and
/// the horizon.
struct LadderProbabilities {
    std::array<double, 3> accept_by_tier{};
    double failure = 0.0;

    double total() const noexcept {
        return accept_by_tier[0] + accept_by_tier[1] + accept_by_tier[2] + failure;
    }
};

/// Absorbing-chain evaluation of the ladder: per tier, desk passage within
/// desk_retry_limit attempts feeds the review acceptance probability;
/// descent mass flows down; T3's terminal behavior follows
/// t3_review_reject_policy. Probabilities sum to 1 with the failure mass.
LadderProbabilities analytic_ladder_probabilities(const ScenarioConfig& config);

/// One row per (load, tier), loads in the order given.
std::vector<CalibrationRow> calibration_table(const ScenarioConfig& config,
                                              std::span<const double> loads);

/// Inverse calibration convenience: adjust the round-2 acceptance (falling
/// back to round 3 when bounds bind) so that C * (1 - desk_reject) hits the
/// target, holding a1 and every major-revision probability fixed. Throws
/// std::invalid_argument when the target is unreachable under that pattern.
std::array<RoundOutcomeProbs, 3> calibrate_round_acceptances(
    double target_eventual, double desk_reject, std::array<RoundOutcomeProbs, 3> rounds);

} // namespace pubsim
