#include "pubsim/reports.hpp"

namespace pubsim {

namespace {

std::vector<Cell> summary_cells(const PopulationSummary& g) {
    return {
        std::string(g.group),
        static_cast<long long>(g.faculty_count),
        g.accepted_all.mean,
        g.accepted_all.median,
        g.accepted_all.sd,
        g.accepted_t1.mean,
        g.accepted_t1.median,
        g.accepted_t1.sd,
        g.total_accepted,
        g.total_accepted_t1,
        g.total_desk_rejections,
    };
}

} // namespace

Table calibration_report(const ScenarioConfig& config, std::span<const double> loads) {
    Table t;
    t.header = {"tier", "load", "desk_reject_effective", "overall_C", "eventual_rate"};
    for (const CalibrationRow& row : calibration_table(config, loads)) {
        t.rows.push_back({std::string(tier_label(row.tier)), row.load,
                          row.desk_reject_effective, row.overall_review_acceptance,
                          row.eventual_acceptance});
    }
    return t;
}

Table cohort_summary_report(const CohortSummary& s) {
    Table t;
    t.header = {"status", "count"};
    t.rows = {
        {std::string("submitted"), static_cast<long long>(s.n_submitted)},
        {std::string("accepted"), static_cast<long long>(s.n_accepted)},
        {std::string("accepted_t1"), static_cast<long long>(s.n_accepted_by_tier[0])},
        {std::string("accepted_t2"), static_cast<long long>(s.n_accepted_by_tier[1])},
        {std::string("accepted_t3"), static_cast<long long>(s.n_accepted_by_tier[2])},
        {std::string("desk_rejected"), static_cast<long long>(s.n_desk_failed)},
        {std::string("review_rejected"), static_cast<long long>(s.n_review_failed)},
        {std::string("censored"), static_cast<long long>(s.n_censored)},
    };
    return t;
}

Table time_histogram_report(const Histogram& hist) {
    Table t;
    t.header = {"bin_lower_months", "count"};
    for (const HistogramBin& b : hist.bins) {
        t.rows.push_back({b.lower_edge, static_cast<long long>(b.count)});
    }
    return t;
}

Table portfolio_summary_report(const PortfolioResult& result) {
    Table t;
    t.header = {"group",     "n",         "mean_all", "median_all",     "sd_all",
                "mean_t1",   "median_t1", "sd_t1",    "total_accepted", "total_t1",
                "total_desk_rejections"};
    t.rows.push_back(summary_cells(result.all));
    if (result.adopters.faculty_count > 0) {
        t.rows.push_back(summary_cells(result.adopters));
        t.rows.push_back(summary_cells(result.rest));
    }
    return t;
}

Table faculty_detail_report(const PortfolioResult& result) {
    Table t;
    t.header = {"faculty_id",  "is_adopter",  "generated",       "accepted_total",
                "accepted_t1", "accepted_t2", "accepted_t3",     "desk_rejections",
                "censored"};
    for (const FacultyPortfolio& f : result.faculty) {
        t.rows.push_back({
            static_cast<long long>(f.faculty_id),
            static_cast<long long>(f.is_adopter ? 1 : 0),
            static_cast<long long>(f.manuscripts_generated),
            static_cast<long long>(f.accepted_total),
            static_cast<long long>(f.accepted_by_tier[0]),
            static_cast<long long>(f.accepted_by_tier[1]),
            static_cast<long long>(f.accepted_by_tier[2]),
            static_cast<long long>(f.desk_rejections_total),
            static_cast<long long>(f.censored_in_flight),
        });
    }
    return t;
}

Table sweep_report(const std::vector<SweepRow>& rows) {
    Table t;
    t.header = {"load",      "n",         "mean_all", "median_all",     "sd_all",
                "mean_t1",   "median_t1", "sd_t1",    "total_accepted", "total_t1",
                "total_desk_rejections"};
    for (const SweepRow& row : rows) {
        std::vector<Cell> cells = summary_cells(row.all);
        cells[0] = row.load; // load replaces the group label
        t.rows.push_back(std::move(cells));
    }
    return t;
}

} // namespace pubsim
