#include "pubsim/model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pubsim {

std::string_view tier_label(Tier t) {
    switch (t) {
    case Tier::T1: return "T1";
    case Tier::T2: return "T2";
    case Tier::T3: return "T3";
    }
    throw std::invalid_argument("tier_label: bad tier");
}

Tier tier_from_label(std::string_view label) {
    if (label == "T1") return Tier::T1;
    if (label == "T2") return Tier::T2;
    if (label == "T3") return Tier::T3;
    throw std::invalid_argument("tier_from_label: expected T1, T2 or T3, got \"" +
                                std::string(label) + "\"");
}

Tier next_tier_down(Tier t) {
    switch (t) {
    case Tier::T1: return Tier::T2;
    case Tier::T2: return Tier::T3;
    case Tier::T3: break;
    }
    throw std::invalid_argument("next_tier_down: T3 has no tier below it");
}

std::string_view t3_policy_label(T3ReviewRejectPolicy p) {
    switch (p) {
    case T3ReviewRejectPolicy::terminate: return "terminate";
    case T3ReviewRejectPolicy::retry_limit: return "retry_limit";
    case T3ReviewRejectPolicy::unlimited: return "unlimited";
    }
    throw std::invalid_argument("t3_policy_label: bad policy");
}

T3ReviewRejectPolicy t3_policy_from_label(std::string_view label) {
    if (label == "terminate") return T3ReviewRejectPolicy::terminate;
    if (label == "retry_limit") return T3ReviewRejectPolicy::retry_limit;
    if (label == "unlimited") return T3ReviewRejectPolicy::unlimited;
    throw std::invalid_argument(
        "t3_policy_from_label: expected terminate, retry_limit or unlimited, got \"" +
        std::string(label) + "\"");
}

std::string_view status_label(ManuscriptStatus s) {
    switch (s) {
    case ManuscriptStatus::accepted: return "accepted";
    case ManuscriptStatus::failed: return "failed";
    case ManuscriptStatus::censored: return "censored";
    }
    throw std::invalid_argument("status_label: bad status");
}

ScenarioConfig default_baseline_config() {
    ScenarioConfig c;

    TierParams t1;
    t1.desk_reject_prob_baseline = 0.70;
    t1.desk_decision_time = 0.3;
    t1.review_time_mean = 6.0;
    t1.review_time_sd = 1.5;
    t1.revision_time_mean = 2.5;
    t1.revision_time_sd = 0.8;
    t1.rounds = {RoundOutcomeProbs{0.00, 0.55}, RoundOutcomeProbs{0.05, 0.50},
                 RoundOutcomeProbs{0.50, 0.45}};
    t1.target_eventual_acceptance = 0.09;

    TierParams t2;
    t2.desk_reject_prob_baseline = 0.50;
    t2.desk_decision_time = 0.3;
    t2.review_time_mean = 5.0;
    t2.review_time_sd = 1.2;
    t2.revision_time_mean = 2.0;
    t2.revision_time_sd = 0.6;
    t2.rounds = {RoundOutcomeProbs{0.01, 0.55}, RoundOutcomeProbs{0.10, 0.44},
                 RoundOutcomeProbs{0.40, 0.35}};
    t2.target_eventual_acceptance = 0.12;

    TierParams t3;
    t3.desk_reject_prob_baseline = 0.30;
    t3.desk_decision_time = 0.3;
    t3.review_time_mean = 4.0;
    t3.review_time_sd = 1.0;
    t3.revision_time_mean = 1.5;
    t3.revision_time_sd = 0.5;
    t3.rounds = {RoundOutcomeProbs{0.02, 0.55}, RoundOutcomeProbs{0.20, 0.37},
                 RoundOutcomeProbs{1.00, 0.00}};
    t3.target_eventual_acceptance = 0.24;

    c.tiers = {t1, t2, t3};
    return c;
}

namespace {

void check(std::vector<std::string>& out, bool ok, const std::string& message) {
    if (!ok) {
        out.push_back(message);
    }
}

template <typename T>
std::string with_value(const char* rule, T got) {
    std::ostringstream os;
    os << rule << " (got " << got << ")";
    return os.str();
}

} // namespace

std::vector<std::string> validate_config(const ScenarioConfig& c) {
    std::vector<std::string> v;

    check(v, c.faculty_pool >= 0, with_value("faculty_pool must be >= 0", c.faculty_pool));
    check(v, std::isfinite(c.horizon_months) ? c.horizon_months > 0.0 : c.horizon_months > 0.0,
          with_value("horizon_months must be > 0", c.horizon_months));
    check(v, c.productivity_lambda >= 0.0 && std::isfinite(c.productivity_lambda),
          with_value("productivity_lambda must be finite and >= 0", c.productivity_lambda));
    check(v, c.adopter_lambda >= 0.0 && std::isfinite(c.adopter_lambda),
          with_value("adopter_lambda must be finite and >= 0", c.adopter_lambda));
    check(v, c.adopter_fraction >= 0.0 && c.adopter_fraction <= 1.0,
          with_value("adopter_fraction must lie in [0, 1]", c.adopter_fraction));
    check(v, c.external_load >= 1.0, with_value("external_load must be >= 1", c.external_load));
    check(v, c.desk_retry_limit >= 1,
          with_value("desk_retry_limit must be >= 1", c.desk_retry_limit));
    if (c.t3_review_reject_policy == T3ReviewRejectPolicy::retry_limit) {
        check(v, c.t3_review_reject_limit >= 1,
              with_value("t3_review_reject_limit must be >= 1", c.t3_review_reject_limit));
    }
    check(v, c.resubmission_gap_desk >= 0.0,
          with_value("resubmission_gap_desk must be >= 0", c.resubmission_gap_desk));
    check(v, c.resubmission_gap_review >= 0.0,
          with_value("resubmission_gap_review must be >= 0", c.resubmission_gap_review));

    for (Tier t : kAllTiers) {
        const TierParams& tp = c.tier_params(t);
        const std::string prefix = "tiers." + std::string(tier_label(t)) + ": ";
        check(v, tp.desk_reject_prob_baseline >= 0.0 && tp.desk_reject_prob_baseline < 1.0,
              prefix + with_value("desk_reject_prob must lie in [0, 1)",
                                  tp.desk_reject_prob_baseline));
        check(v, tp.desk_decision_time >= 0.0,
              prefix + with_value("desk_decision_time must be >= 0", tp.desk_decision_time));
        check(v, tp.review_time_mean > 0.0,
              prefix + with_value("review_time_mean must be > 0", tp.review_time_mean));
        check(v, tp.review_time_sd >= 0.0,
              prefix + with_value("review_time_sd must be >= 0", tp.review_time_sd));
        check(v, tp.revision_time_mean > 0.0,
              prefix + with_value("revision_time_mean must be > 0", tp.revision_time_mean));
        check(v, tp.revision_time_sd >= 0.0,
              prefix + with_value("revision_time_sd must be >= 0", tp.revision_time_sd));
        check(v, tp.target_eventual_acceptance >= 0.0 && tp.target_eventual_acceptance <= 1.0,
              prefix + with_value("target_eventual_acceptance must lie in [0, 1]",
                                  tp.target_eventual_acceptance));
        for (std::size_t k = 0; k < tp.rounds.size(); ++k) {
            const RoundOutcomeProbs& r = tp.rounds[k];
            const std::string round_prefix = prefix + "round " + std::to_string(k + 1) + ": ";
            check(v, r.accept >= 0.0, round_prefix + with_value("accept must be >= 0", r.accept));
            check(v, r.major_revision >= 0.0,
                  round_prefix + with_value("major_revision must be >= 0", r.major_revision));
            check(v, r.accept + r.major_revision <= 1.0 + 1e-12,
                  round_prefix + with_value("accept + major_revision must be <= 1",
                                            r.accept + r.major_revision));
        }
    }
    return v;
}

} // namespace pubsim
