#include "pubsim/scenarios.hpp"

#include "pubsim/reports.hpp"
#include "pubsim/table.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>

using namespace pubsim;

TEST_CASE("single-tier cohort with certain desk rejection") {
    ScenarioConfig c = default_baseline_config();
    for (Tier t : kAllTiers) {
        c.tier_params(t).desk_reject_prob_baseline = 1.0;
    }
    const CohortSummary s = run_single_tier_cohort(100, Tier::T1, c, 1, 2);
    CHECK(s.n_submitted == 100);
    CHECK(s.n_accepted == 0);
    CHECK(s.n_desk_failed == 100);
    CHECK(s.n_review_failed == 0);
    CHECK(s.time_to_acceptance.empty());
}

TEST_CASE("cohort partition invariant") {
    const ScenarioConfig c = default_baseline_config();
    for (Tier tier : kAllTiers) {
        const CohortSummary s = run_single_tier_cohort(5000, tier, c, 77, 4);
        CHECK(s.n_submitted ==
              s.n_accepted + s.n_desk_failed + s.n_review_failed + s.n_censored);
        CHECK(s.n_accepted == s.n_accepted_by_tier[0] + s.n_accepted_by_tier[1] +
                                  s.n_accepted_by_tier[2]);
        CHECK(static_cast<long>(s.elapsed_histogram.total()) == s.n_accepted);
    }
}

TEST_CASE("single-attempt T1 cohort tracks the eventual acceptance rate") {
    const ScenarioConfig c = default_baseline_config();
    const CohortSummary s = run_single_tier_cohort(10000, Tier::T1, c, 42, 4);
    // eventual rate 0.086625, 3 binomial sigmas at n = 10^4
    CHECK(std::abs(s.acceptance_rate - 0.086625) < 0.0084);
    CHECK(s.n_censored == 0);
}

TEST_CASE("degenerate SUA run pins the forced acceptance path") {
    ScenarioConfig c = default_baseline_config();
    for (Tier t : kAllTiers) {
        TierParams& tp = c.tier_params(t);
        tp.desk_reject_prob_baseline = 0.0;
        tp.review_time_sd = 0.0;
        tp.revision_time_sd = 0.0;
    }
    // revise in round 1, accept in round 2
    c.tier_params(Tier::T1).rounds = {RoundOutcomeProbs{0.0, 1.0}, RoundOutcomeProbs{1.0, 0.0},
                                      RoundOutcomeProbs{1.0, 0.0}};
    const CohortSummary s = run_sua_cohort(1, c, 5, 1);
    CHECK(s.n_accepted == 1);
    CHECK(s.n_accepted_by_tier[0] == 1);
    CHECK(s.time_to_acceptance.mean == doctest::Approx(0.3 + 6.0 + 2.5 + 6.0).epsilon(1e-12));
}

TEST_CASE("SUA per-tier proportions match the analytic ladder") {
    const ScenarioConfig c = default_baseline_config();
    const CohortSummary s = run_sua_cohort(20000, c, 91, 4);
    // horizon-free by construction, so nothing is censored
    CHECK(s.n_censored == 0);
    // T1 share: (1 - 0.7^3) * 0.28875 with 3 binomial sigmas
    const double p = (1.0 - 0.343) * 0.28875;
    const double se = std::sqrt(p * (1.0 - p) / 20000.0);
    CHECK(std::abs(static_cast<double>(s.n_accepted_by_tier[0]) / 20000.0 - p) < 3.0 * se);
}

TEST_CASE("zero productivity yields empty portfolios") {
    ScenarioConfig c = default_baseline_config();
    c.faculty_pool = 200;
    c.productivity_lambda = 0.0;
    const PortfolioResult r = run_portfolio(c, 3, 2);
    CHECK(r.all.faculty_count == 200);
    CHECK(r.all.total_accepted == 0);
    CHECK(r.all.accepted_all.mean == 0.0);
    for (const FacultyPortfolio& f : r.faculty) {
        CHECK(f.manuscripts_generated == 0);
    }
}

TEST_CASE("portfolio accounting identities hold per faculty") {
    ScenarioConfig c = default_baseline_config();
    c.faculty_pool = 500;
    c.adopter_fraction = 0.25;
    c.external_load = 2.0;
    const PortfolioResult r = run_portfolio(c, 17, 4);
    CHECK(r.adopters.faculty_count == 125);
    CHECK(r.rest.faculty_count == 375);
    long long accepted = 0;
    for (const FacultyPortfolio& f : r.faculty) {
        CHECK(f.accepted_total ==
              f.accepted_by_tier[0] + f.accepted_by_tier[1] + f.accepted_by_tier[2]);
        CHECK(f.accepted_total + f.failed_total + f.censored_in_flight ==
              f.manuscripts_generated);
        accepted += f.accepted_total;
    }
    CHECK(accepted == r.all.total_accepted);
    CHECK(r.all.total_accepted == r.adopters.total_accepted + r.rest.total_accepted);
    CHECK(r.all.total_desk_rejections ==
          r.adopters.total_desk_rejections + r.rest.total_desk_rejections);
}

TEST_CASE("manuscript generation volume follows the productivity rate") {
    ScenarioConfig c = default_baseline_config();
    c.faculty_pool = 2000;
    const PortfolioResult r = run_portfolio(c, 19, 4);
    double generated = 0.0;
    for (const FacultyPortfolio& f : r.faculty) {
        generated += static_cast<double>(f.manuscripts_generated);
    }
    // 6 years at lambda = 2: mean 12 manuscripts per faculty
    CHECK(std::abs(generated / 2000.0 - 12.0) < 0.3);
}

TEST_CASE("zero adopter fraction degenerates to the plain portfolio") {
    ScenarioConfig c = default_baseline_config();
    c.faculty_pool = 400;
    c.external_load = 2.0;
    const PortfolioResult plain = run_portfolio(c, 23, 2);
    const PortfolioResult named = run_early_adopter(c, 23, 3);
    CHECK(to_csv(portfolio_summary_report(plain)) == to_csv(portfolio_summary_report(named)));
    CHECK(named.adopters.faculty_count == 0);
}

TEST_CASE("sweep degeneracy: the unit-load row equals the baseline run") {
    ScenarioConfig c = default_baseline_config();
    c.faculty_pool = 400;
    const std::array<double, 1> loads{1.0};
    const std::vector<SweepRow> rows = run_load_sweep(c, loads, 29, 2);
    REQUIRE(rows.size() == 1);
    const PortfolioResult base = run_portfolio(c, 29, 2);
    CHECK(rows[0].all.accepted_all.mean == base.all.accepted_all.mean);
    CHECK(rows[0].all.accepted_all.sd == base.all.accepted_all.sd);
    CHECK(rows[0].all.total_accepted == base.all.total_accepted);
    CHECK(rows[0].all.total_desk_rejections == base.all.total_desk_rejections);
}

TEST_CASE("sweep rejects loads below one") {
    const ScenarioConfig c = default_baseline_config();
    const std::array<double, 2> loads{1.0, 0.5};
    CHECK_THROWS_AS(run_load_sweep(c, loads, 1, 1), std::invalid_argument);
}

TEST_CASE("summaries are byte-identical across reruns and worker counts") {
    ScenarioConfig c = default_baseline_config();
    c.faculty_pool = 600;
    c.adopter_fraction = 0.1;
    const std::string a = to_csv(faculty_detail_report(run_portfolio(c, 31, 1)));
    const std::string b = to_csv(faculty_detail_report(run_portfolio(c, 31, 7)));
    const std::string d = to_csv(faculty_detail_report(run_portfolio(c, 31, 7)));
    CHECK(a == b);
    CHECK(b == d);
}
