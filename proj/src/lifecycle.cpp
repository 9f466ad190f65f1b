#include "pubsim/lifecycle.hpp"

#include "pubsim/calibration.hpp"

#include <array>
#include <cassert>
#include <stdexcept>

namespace pubsim {

DeskOutcome desk_stage(ManuscriptState& state, const TierParams& params, double load,
                       RngStream& rng) {
    state.clock += params.desk_decision_time;
    const double p = load_adjusted_desk_rate(params.desk_reject_prob_baseline, load);
    if (rng.bernoulli(p)) {
        ++state.desk_rejections_at_tier;
        ++state.desk_rejection_count;
        return DeskOutcome::reject;
    }
    return DeskOutcome::pass;
}

ReviewOutcome review_stage(ManuscriptState& state, const TierParams& params, RngStream& rng) {
    assert(state.current_round >= 1 && state.current_round <= 3);
    state.clock += sample_truncated_normal(params.review_time_mean, params.review_time_sd, rng);

    const RoundOutcomeProbs& round =
        params.rounds[static_cast<std::size_t>(state.current_round - 1)];
    const std::array<double, 3> probs{round.accept, round.major_revision, round.reject()};
    const int outcome = sample_categorical(probs, rng);
    ++state.rounds_completed;

    if (outcome == 0) {
        return ReviewOutcome::accept;
    }
    if (outcome == 1) {
        if (state.current_round >= 3) {
            // kind world: still under major revision after the final round
            return ReviewOutcome::accept;
        }
        state.clock +=
            sample_truncated_normal(params.revision_time_mean, params.revision_time_sd, rng);
        ++state.current_round;
        return ReviewOutcome::revise;
    }
    ++state.review_rejection_count;
    if (state.current_tier == Tier::T3) {
        ++state.t3_review_rejections;
    }
    return ReviewOutcome::reject;
}

namespace {

ManuscriptOutcome make_outcome(const ManuscriptState& st, ManuscriptStatus status,
                               double submit_month, double finish_month,
                               FailureKind failure_kind, Tier accepted_tier) {
    ManuscriptOutcome out;
    out.status = status;
    out.accepted_tier = accepted_tier;
    out.failure_kind = failure_kind;
    out.submit_month = submit_month;
    out.finish_month = finish_month;
    out.elapsed_months = finish_month - submit_month;
    out.desk_rejection_count = st.desk_rejection_count;
    out.review_rejection_count = st.review_rejection_count;
    out.rounds_completed = st.rounds_completed;
    return out;
}

} // namespace

ManuscriptOutcome run_manuscript(double submit_month, const ScenarioConfig& config, double load,
                                 RngStream& rng) {
    const double horizon = config.horizon_months;
    if (!(submit_month < horizon)) {
        throw std::invalid_argument("run_manuscript: submit_month must precede the horizon");
    }

    ManuscriptState st;
    st.current_tier = config.start_tier;
    st.clock = submit_month;

    const auto censored = [&] {
        return make_outcome(st, ManuscriptStatus::censored, submit_month, horizon,
                            FailureKind::none, st.current_tier);
    };
    const auto failed = [&](FailureKind kind) {
        return make_outcome(st, ManuscriptStatus::failed, submit_month, st.clock, kind,
                            st.current_tier);
    };

    while (true) {
        const TierParams& tp = config.tier_params(st.current_tier);

        if (desk_stage(st, tp, load, rng) == DeskOutcome::reject) {
            if (st.clock > horizon) return censored();
            if (st.desk_rejections_at_tier >= config.desk_retry_limit) {
                if (st.current_tier == Tier::T3) {
                    return failed(FailureKind::desk);
                }
                st.current_tier = next_tier_down(st.current_tier);
                st.desk_rejections_at_tier = 0;
            }
            st.clock += config.resubmission_gap_desk;
            if (st.clock > horizon) return censored();
            continue;
        }
        if (st.clock > horizon) return censored();

        // in review at this journal
        st.current_round = 1;
        bool resubmit = false;
        while (!resubmit) {
            const ReviewOutcome r = review_stage(st, tp, rng);
            if (st.clock > horizon) return censored();
            switch (r) {
            case ReviewOutcome::accept:
                return make_outcome(st, ManuscriptStatus::accepted, submit_month, st.clock,
                                    FailureKind::none, st.current_tier);
            case ReviewOutcome::revise:
                continue;
            case ReviewOutcome::reject:
                if (st.current_tier != Tier::T3) {
                    st.current_tier = next_tier_down(st.current_tier);
                } else {
                    switch (config.t3_review_reject_policy) {
                    case T3ReviewRejectPolicy::terminate:
                        return failed(FailureKind::review);
                    case T3ReviewRejectPolicy::retry_limit:
                        if (st.t3_review_rejections >= config.t3_review_reject_limit) {
                            return failed(FailureKind::review);
                        }
                        break;
                    case T3ReviewRejectPolicy::unlimited:
                        break;
                    }
                }
                st.desk_rejections_at_tier = 0;
                st.clock += config.resubmission_gap_review;
                if (st.clock > horizon) return censored();
                resubmit = true;
                break;
            }
        }
    }
}

} // namespace pubsim
