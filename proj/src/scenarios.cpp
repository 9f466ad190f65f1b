#include "pubsim/scenarios.hpp"

#include "pubsim/lifecycle.hpp"
#include "pubsim/parallel.hpp"
#include "pubsim/rng.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace pubsim {

namespace {

constexpr double kNoHorizon = std::numeric_limits<double>::infinity();

// one desk attempt, then at most one journal's review rounds; nothing is
// resubmitted anywhere
ManuscriptOutcome run_single_attempt(Tier tier, const ScenarioConfig& config, RngStream& rng) {
    const TierParams& tp = config.tier_params(tier);
    ManuscriptState st;
    st.current_tier = tier;

    if (desk_stage(st, tp, config.external_load, rng) == DeskOutcome::reject) {
        ManuscriptOutcome out;
        out.status = ManuscriptStatus::failed;
        out.failure_kind = FailureKind::desk;
        out.finish_month = st.clock;
        out.elapsed_months = st.clock;
        out.desk_rejection_count = st.desk_rejection_count;
        return out;
    }

    st.current_round = 1;
    while (true) {
        const ReviewOutcome r = review_stage(st, tp, rng);
        if (r == ReviewOutcome::revise) {
            continue;
        }
        ManuscriptOutcome out;
        out.finish_month = st.clock;
        out.elapsed_months = st.clock;
        out.desk_rejection_count = st.desk_rejection_count;
        out.review_rejection_count = st.review_rejection_count;
        out.rounds_completed = st.rounds_completed;
        if (r == ReviewOutcome::accept) {
            out.status = ManuscriptStatus::accepted;
            out.accepted_tier = tier;
        } else {
            out.status = ManuscriptStatus::failed;
            out.failure_kind = FailureKind::review;
        }
        return out;
    }
}

CohortSummary summarize_cohort(const std::vector<ManuscriptOutcome>& outcomes) {
    CohortSummary s;
    s.n_submitted = static_cast<long>(outcomes.size());
    std::vector<double> accepted_times;
    for (const ManuscriptOutcome& o : outcomes) {
        switch (o.status) {
        case ManuscriptStatus::accepted:
            ++s.n_accepted;
            ++s.n_accepted_by_tier[static_cast<std::size_t>(tier_index(o.accepted_tier))];
            accepted_times.push_back(o.elapsed_months);
            break;
        case ManuscriptStatus::failed:
            if (o.failure_kind == FailureKind::desk) {
                ++s.n_desk_failed;
            } else {
                ++s.n_review_failed;
            }
            break;
        case ManuscriptStatus::censored:
            ++s.n_censored;
            break;
        }
    }
    s.acceptance_rate =
        s.n_submitted > 0 ? static_cast<double>(s.n_accepted) / s.n_submitted : 0.0;
    s.time_to_acceptance = summarize(accepted_times);
    s.elapsed_histogram = histogram(accepted_times, 1.0);
    return s;
}

} // namespace

CohortSummary run_single_tier_cohort(long n, Tier tier, const ScenarioConfig& config,
                                     std::uint64_t seed, int workers) {
    if (n < 1) {
        throw std::invalid_argument("run_single_tier_cohort: n must be >= 1");
    }
    std::vector<ManuscriptOutcome> outcomes(static_cast<std::size_t>(n));
    parallel_for(n, workers, [&](long i) {
        RngStream rng = derive_stream(seed, static_cast<std::uint64_t>(i));
        outcomes[static_cast<std::size_t>(i)] = run_single_attempt(tier, config, rng);
    });
    return summarize_cohort(outcomes);
}

CohortSummary run_sua_cohort(long n, const ScenarioConfig& config, std::uint64_t seed,
                             int workers) {
    if (n < 1) {
        throw std::invalid_argument("run_sua_cohort: n must be >= 1");
    }
    ScenarioConfig open_ended = config;
    open_ended.horizon_months = kNoHorizon;

    std::vector<ManuscriptOutcome> outcomes(static_cast<std::size_t>(n));
    parallel_for(n, workers, [&](long i) {
        RngStream rng = derive_stream(seed, static_cast<std::uint64_t>(i));
        outcomes[static_cast<std::size_t>(i)] =
            run_manuscript(0.0, open_ended, open_ended.external_load, rng);
    });
    return summarize_cohort(outcomes);
}

namespace {

PopulationSummary summarize_group(std::string label,
                                  const std::vector<FacultyPortfolio>& faculty, bool adopters,
                                  bool rest) {
    PopulationSummary g;
    g.group = std::move(label);
    std::vector<double> accepted_all;
    std::vector<double> accepted_t1;
    for (const FacultyPortfolio& f : faculty) {
        if ((adopters && !f.is_adopter) || (rest && f.is_adopter)) {
            continue;
        }
        ++g.faculty_count;
        accepted_all.push_back(static_cast<double>(f.accepted_total));
        accepted_t1.push_back(static_cast<double>(f.accepted_by_tier[0]));
        g.total_accepted += f.accepted_total;
        g.total_accepted_t1 += f.accepted_by_tier[0];
        g.total_desk_rejections += f.desk_rejections_total;
        g.total_censored += f.censored_in_flight;
    }
    g.accepted_all = summarize(accepted_all);
    g.accepted_t1 = summarize(accepted_t1);
    return g;
}

} // namespace

PortfolioResult run_portfolio(const ScenarioConfig& config, std::uint64_t seed, int workers) {
    if (!(config.horizon_months > 0.0) || !std::isfinite(config.horizon_months)) {
        throw std::invalid_argument("run_portfolio: horizon_months must be finite and > 0");
    }
    const long pool = config.faculty_pool;
    const long n_adopters = std::lround(config.adopter_fraction * static_cast<double>(pool));
    const int years = static_cast<int>(config.horizon_months / 12.0);

    PortfolioResult result;
    result.faculty.resize(static_cast<std::size_t>(pool));

    parallel_for(pool, workers, [&](long f) {
        RngStream rng = derive_stream(seed, static_cast<std::uint64_t>(f));
        FacultyPortfolio& fp = result.faculty[static_cast<std::size_t>(f)];
        fp.faculty_id = f;
        fp.is_adopter = f < n_adopters;
        const double lambda =
            fp.is_adopter ? config.adopter_lambda : config.productivity_lambda;

        for (int y = 0; y < years; ++y) {
            const int count = sample_poisson(lambda, rng);
            for (int m = 0; m < count; ++m) {
                const double start = sample_start_offset(y, years, rng);
                const ManuscriptOutcome out =
                    run_manuscript(start, config, config.external_load, rng);
                ++fp.manuscripts_generated;
                fp.desk_rejections_total += out.desk_rejection_count;
                switch (out.status) {
                case ManuscriptStatus::accepted:
                    ++fp.accepted_total;
                    ++fp.accepted_by_tier[static_cast<std::size_t>(
                        tier_index(out.accepted_tier))];
                    break;
                case ManuscriptStatus::failed:
                    ++fp.failed_total;
                    break;
                case ManuscriptStatus::censored:
                    ++fp.censored_in_flight;
                    break;
                }
            }
        }
    });

    result.all = summarize_group("all", result.faculty, false, false);
    result.adopters = summarize_group("adopters", result.faculty, true, false);
    result.rest = summarize_group("rest", result.faculty, false, true);
    return result;
}

PortfolioResult run_early_adopter(const ScenarioConfig& config, std::uint64_t seed,
                                  int workers) {
    return run_portfolio(config, seed, workers);
}

std::vector<SweepRow> run_load_sweep(const ScenarioConfig& config, std::span<const double> loads,
                                     std::uint64_t seed, int workers) {
    std::vector<SweepRow> rows;
    rows.reserve(loads.size());
    for (double load : loads) {
        if (!(load >= 1.0)) {
            throw std::invalid_argument("run_load_sweep: loads must be >= 1");
        }
        ScenarioConfig c = config;
        c.external_load = load;
        c.adopter_fraction = 0.0;
        SweepRow row;
        row.load = load;
        row.all = run_portfolio(c, seed, workers).all;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace pubsim
