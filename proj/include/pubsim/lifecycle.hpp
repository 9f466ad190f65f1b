#pragma once

#include "pubsim/model.hpp"
#include "pubsim/rng.hpp"

namespace pubsim {

/// Mutable trajectory state for one manuscript.
struct ManuscriptState {
    Tier current_tier = Tier::T1;
    int desk_rejections_at_tier = 0; // resets on descent / fresh T3 submission
    int t3_review_rejections = 0;
    int current_round = 1; // 1..3 within the current journal
    double clock = 0.0;    // absolute months
    int desk_rejection_count = 0;
    int review_rejection_count = 0;
    int rounds_completed = 0;
};

enum class DeskOutcome { pass, reject };
enum class ReviewOutcome { accept, revise, reject };

/// One desk triage decision. The decision time accrues whether or not the
/// manuscript passes; rejection probability is the load-adjusted desk rate.
DeskOutcome desk_stage(ManuscriptState& state, const TierParams& params, double load,
                       RngStream& rng);

/// One review round: adds a review-time draw, draws the round outcome, and
/// on a round-1/2 major revision adds the author revision time and advances
/// the round. A round-3 major revision returns accept (kind world) with no
/// further revision time.
ReviewOutcome review_stage(ManuscriptState& state, const TierParams& params, RngStream& rng);

/// Full ladder trajectory from submit_month: desk loop with descent after
/// desk_retry_limit same-tier desk rejections (failure at T3), review
/// rejection at T1/T2 descends one tier, T3 review rejection follows the
/// configured policy. The horizon is checked after every clock advance; a
/// trajectory still in flight (or an acceptance landing past the horizon)
/// is censored at the horizon. Throws std::invalid_argument when
/// submit_month >= config.horizon_months.
ManuscriptOutcome run_manuscript(double submit_month, const ScenarioConfig& config, double load,
                                 RngStream& rng);

} // namespace pubsim
