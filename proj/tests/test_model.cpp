#include "pubsim/model.hpp"

#include <doctest.h>

#include <stdexcept>

#include <string>

using namespace pubsim;

TEST_CASE("tier ordering helpers") {
    CHECK(next_tier_down(Tier::T1) == Tier::T2);
    CHECK(next_tier_down(Tier::T2) == Tier::T3);
    CHECK_THROWS_AS(next_tier_down(Tier::T3), std::invalid_argument);
    CHECK(!has_next_tier_down(Tier::T3));
    for (Tier t : kAllTiers) {
        CHECK(tier_from_label(tier_label(t)) == t);
    }
    CHECK_THROWS_AS(tier_from_label("T4"), std::invalid_argument);
}

TEST_CASE("baseline defaults carry the full parameter set") {
    const ScenarioConfig c = default_baseline_config();

    CHECK(c.faculty_pool == 30000);
    CHECK(c.horizon_months == 72.0);
    CHECK(c.productivity_lambda == 2.0);
    CHECK(c.external_load == 1.0);
    CHECK(c.desk_retry_limit == 3);
    CHECK(c.t3_review_reject_policy == T3ReviewRejectPolicy::terminate);
    CHECK(c.resubmission_gap_desk == 0.0);
    CHECK(c.resubmission_gap_review == 0.0);
    CHECK(c.start_tier == Tier::T1);

    CHECK(c.tier_params(Tier::T1).desk_reject_prob_baseline == 0.70);
    CHECK(c.tier_params(Tier::T2).desk_reject_prob_baseline == 0.50);
    CHECK(c.tier_params(Tier::T3).desk_reject_prob_baseline == 0.30);

    CHECK(c.tier_params(Tier::T1).review_time_mean == 6.0);
    CHECK(c.tier_params(Tier::T1).review_time_sd == 1.5);
    CHECK(c.tier_params(Tier::T3).revision_time_mean == 1.5);
    CHECK(c.tier_params(Tier::T3).revision_time_sd == 0.5);

    const RoundOutcomeProbs last_t3 = c.tier_params(Tier::T3).rounds[2];
    CHECK(last_t3.accept == 1.00);
    CHECK(last_t3.major_revision == 0.00);

    CHECK(c.tier_params(Tier::T1).target_eventual_acceptance == 0.09);
    CHECK(c.tier_params(Tier::T2).target_eventual_acceptance == 0.12);
    CHECK(c.tier_params(Tier::T3).target_eventual_acceptance == 0.24);

    CHECK(validate_config(c).empty());
}

TEST_CASE("default round tables are monotone and sub-stochastic") {
    const ScenarioConfig c = default_baseline_config();
    for (Tier t : kAllTiers) {
        const auto& rounds = c.tier_params(t).rounds;
        for (std::size_t k = 0; k < rounds.size(); ++k) {
            CHECK(rounds[k].reject() >= 0.0);
            CHECK(rounds[k].reject() <= 1.0);
            if (k > 0) {
                CHECK(rounds[k].accept >= rounds[k - 1].accept);
                CHECK(rounds[k].major_revision <= rounds[k - 1].major_revision);
            }
        }
    }
}

TEST_CASE("validate_config reports every violation") {
    SUBCASE("load below one") {
        ScenarioConfig c = default_baseline_config();
        c.external_load = 0.5;
        const auto v = validate_config(c);
        REQUIRE(v.size() == 1);
        CHECK(v[0].find("external_load") != std::string::npos);
    }
    SUBCASE("round probabilities above one") {
        ScenarioConfig c = default_baseline_config();
        c.tier_params(Tier::T1).rounds[0] = {0.7, 0.5};
        const auto v = validate_config(c);
        REQUIRE(v.size() == 1);
        CHECK(v[0].find("accept + major_revision") != std::string::npos);
    }
    SUBCASE("desk probability of one is out of range") {
        ScenarioConfig c = default_baseline_config();
        c.tier_params(Tier::T2).desk_reject_prob_baseline = 1.0;
        CHECK(validate_config(c).size() == 1);
    }
    SUBCASE("several violations come back together") {
        ScenarioConfig c = default_baseline_config();
        c.external_load = 0.0;
        c.adopter_fraction = -0.2;
        c.resubmission_gap_desk = -1.0;
        c.horizon_months = 0.0;
        CHECK(validate_config(c).size() == 4);
    }
    SUBCASE("retry limit bounds") {
        ScenarioConfig c = default_baseline_config();
        c.desk_retry_limit = 0;
        CHECK(validate_config(c).size() == 1);
        c.desk_retry_limit = 3;
        c.t3_review_reject_policy = T3ReviewRejectPolicy::retry_limit;
        c.t3_review_reject_limit = 0;
        CHECK(validate_config(c).size() == 1);
    }
}
