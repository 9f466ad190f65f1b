#pragma once

#include "pubsim/model.hpp"
#include "pubsim/statistics.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pubsim {

/// Aggregate over one cohort of manuscripts.
struct CohortSummary {
    long n_submitted = 0;
    long n_accepted = 0;
    std::array<long, 3> n_accepted_by_tier{};
    long n_desk_failed = 0;
    long n_review_failed = 0;
    long n_censored = 0;
    double acceptance_rate = 0.0;
    SummaryStats time_to_acceptance; // over accepted manuscripts
    Histogram elapsed_histogram;     // accepted elapsed months, 1-month bins
};

/// Aggregate over a faculty group ("all", "adopters" or "rest").
struct PopulationSummary {
    std::string group;
    long faculty_count = 0;
    SummaryStats accepted_all; // accepted_total per faculty
    SummaryStats accepted_t1;  // T1 acceptances per faculty
    long long total_accepted = 0;
    long long total_accepted_t1 = 0;
    long long total_desk_rejections = 0;
    long long total_censored = 0;
};

struct PortfolioResult {
    PopulationSummary all;
    PopulationSummary adopters;
    PopulationSummary rest;
    std::vector<FacultyPortfolio> faculty;
};

struct SweepRow {
    double load = 1.0;
    PopulationSummary all;
};

/// One desk attempt at the given tier and, if passed, one journey through
/// that journal's review rounds. No resubmission of any kind, no horizon.
CohortSummary run_single_tier_cohort(long n, Tier tier, const ScenarioConfig& config,
                                     std::uint64_t seed, int workers = 1);

/// Submit-until-acceptance: the full ladder with an infinite horizon.
CohortSummary run_sua_cohort(long n, const ScenarioConfig& config, std::uint64_t seed,
                             int workers = 1);

/// Faculty portfolios over the tenure horizon. The first
/// round(adopter_fraction * pool) faculty ids are adopters; each faculty
/// draws a Poisson manuscript count per year, a uniform start month inside
/// that year, and runs every manuscript through the ladder under the
/// config's external load.
PortfolioResult run_portfolio(const ScenarioConfig& config, std::uint64_t seed, int workers = 1);

/// Same engine; named entry point for the adopter/rest comparison.
PortfolioResult run_early_adopter(const ScenarioConfig& config, std::uint64_t seed,
                                  int workers = 1);

/// One whole-population portfolio per load, adopter_fraction forced to 0.
/// Every load reuses the same master seed, so the L = 1 row coincides with
/// a plain baseline portfolio run.
std::vector<SweepRow> run_load_sweep(const ScenarioConfig& config, std::span<const double> loads,
                                     std::uint64_t seed, int workers = 1);

} // namespace pubsim
