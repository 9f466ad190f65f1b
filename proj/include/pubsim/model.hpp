#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pubsim {

/// Journal tier, ordered T1 (highest) > T2 > T3.
enum class Tier : int { T1 = 0, T2 = 1, T3 = 2 };

inline constexpr std::array<Tier, 3> kAllTiers{Tier::T1, Tier::T2, Tier::T3};

constexpr int tier_index(Tier t) noexcept { return static_cast<int>(t); }
constexpr bool has_next_tier_down(Tier t) noexcept { return t != Tier::T3; }

std::string_view tier_label(Tier t);
Tier tier_from_label(std::string_view label); // throws std::invalid_argument

/// "Next tier down" is defined for T1 and T2 only; throws for T3.
Tier next_tier_down(Tier t);

/// One review round's editorial decision distribution. The rejection
/// probability is implied: 1 - accept - major_revision.
struct RoundOutcomeProbs {
    double accept = 0.0;
    double major_revision = 0.0;

    double reject() const noexcept {
        const double r = 1.0 - accept - major_revision;
        return r > 0.0 ? r : 0.0;
    }
};

/// Per-tier editorial parameters. Durations are months; review and
/// revision times are truncated-normal (mean, sd) pairs. Exactly three
/// review rounds per journal.
struct TierParams {
    double desk_reject_prob_baseline = 0.0;
    double desk_decision_time = 0.3;
    double review_time_mean = 0.0;
    double review_time_sd = 0.0;
    double revision_time_mean = 0.0;
    double revision_time_sd = 0.0;
    std::array<RoundOutcomeProbs, 3> rounds{};
    // validation target only; the engine never reads it
    double target_eventual_acceptance = 0.0;
};

/// What happens after a review rejection at T3. With retry_limit the
/// manuscript fails on its t3_review_reject_limit-th T3 review rejection;
/// terminate behaves like a limit of one.
enum class T3ReviewRejectPolicy { terminate, retry_limit, unlimited };

std::string_view t3_policy_label(T3ReviewRejectPolicy p);
T3ReviewRejectPolicy t3_policy_from_label(std::string_view label);

/// Full experiment description.
struct ScenarioConfig {
    long faculty_pool = 30000;
    double horizon_months = 72.0;
    double productivity_lambda = 2.0; // papers per year
    double adopter_fraction = 0.0;
    double adopter_lambda = 20.0;
    double external_load = 1.0; // L >= 1, inflates desk rejection only
    int desk_retry_limit = 3;   // same-tier desk rejections before descent/failure
    T3ReviewRejectPolicy t3_review_reject_policy = T3ReviewRejectPolicy::terminate;
    int t3_review_reject_limit = 3; // used only with retry_limit
    double resubmission_gap_desk = 0.0;
    double resubmission_gap_review = 0.0;
    Tier start_tier = Tier::T1;
    std::array<TierParams, 3> tiers{};
    std::uint64_t master_seed = 0;

    const TierParams& tier_params(Tier t) const { return tiers[tier_index(t)]; }
    TierParams& tier_params(Tier t) { return tiers[tier_index(t)]; }
};

/// The default parameter set: desk rates (0.70, 0.50, 0.30), desk time
/// 0.3 mo, review times (6.0/1.5, 5.0/1.2, 4.0/1.0), revision times
/// (2.5/0.8, 2.0/0.6, 1.5/0.5), per-round outcome tables, acceptance
/// targets (0.09, 0.12, 0.24), 30,000 faculty over 72 months.
ScenarioConfig default_baseline_config();

/// Every violated invariant, not just the first. Empty means ok.
std::vector<std::string> validate_config(const ScenarioConfig& config);

enum class ManuscriptStatus { accepted, failed, censored };

/// How a failed manuscript terminated.
enum class FailureKind { none, desk, review };

std::string_view status_label(ManuscriptStatus s);

/// Terminal record of one manuscript trajectory.
struct ManuscriptOutcome {
    ManuscriptStatus status = ManuscriptStatus::failed;
    Tier accepted_tier = Tier::T1;              // meaningful when accepted
    FailureKind failure_kind = FailureKind::none; // meaningful when failed
    double submit_month = 0.0;
    double finish_month = 0.0; // acceptance / terminal rejection / horizon
    double elapsed_months = 0.0;
    int desk_rejection_count = 0;
    int review_rejection_count = 0;
    int rounds_completed = 0;
};

/// Per-faculty aggregate over the tenure horizon.
struct FacultyPortfolio {
    long faculty_id = 0;
    bool is_adopter = false;
    long manuscripts_generated = 0;
    long accepted_total = 0;
    std::array<long, 3> accepted_by_tier{};
    long failed_total = 0;
    long desk_rejections_total = 0;
    long censored_in_flight = 0;
};

} // namespace pubsim
