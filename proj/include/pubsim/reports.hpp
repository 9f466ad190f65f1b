#pragma once

#include "pubsim/calibration.hpp"
#include "pubsim/scenarios.hpp"
#include "pubsim/table.hpp"

#include <span>
#include <vector>

namespace pubsim {

/// columns: tier, load, desk_reject_effective, overall_C, eventual_rate
Table calibration_report(const ScenarioConfig& config, std::span<const double> loads);

/// columns: status, count
Table cohort_summary_report(const CohortSummary& summary);

/// columns: bin_lower_months, count
Table time_histogram_report(const Histogram& hist);

/// columns: group, n, mean_all, median_all, sd_all, mean_t1, median_t1,
/// sd_t1, total_accepted, total_t1, total_desk_rejections
Table portfolio_summary_report(const PortfolioResult& result);

/// columns: faculty_id, is_adopter, generated, accepted_total, accepted_t1,
/// accepted_t2, accepted_t3, desk_rejections, censored
Table faculty_detail_report(const PortfolioResult& result);

/// columns: load + the portfolio summary columns (whole population)
Table sweep_report(const std::vector<SweepRow>& rows);

} // namespace pubsim
