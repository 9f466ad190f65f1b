#include "pubsim/calibration.hpp"

#include <cmath>
#include <stdexcept>

namespace pubsim {

double load_adjusted_desk_rate(double p_baseline, double load) {
    if (!(p_baseline >= 0.0 && p_baseline <= 1.0)) {
        throw std::invalid_argument("load_adjusted_desk_rate: p_baseline must lie in [0, 1]");
    }
    if (!(load >= 1.0)) {
        throw std::invalid_argument("load_adjusted_desk_rate: load must be >= 1");
    }
    return 1.0 - (1.0 - p_baseline) / load;
}

double overall_review_acceptance(const std::array<RoundOutcomeProbs, 3>& rounds) {
    for (const RoundOutcomeProbs& r : rounds) {
        if (!(r.accept >= 0.0) || !(r.major_revision >= 0.0) ||
            r.accept + r.major_revision > 1.0 + 1e-12) {
            throw std::invalid_argument("overall_review_acceptance: malformed round probabilities");
        }
    }
    return rounds[0].accept +
           rounds[0].major_revision *
               (rounds[1].accept +
                rounds[1].major_revision * (rounds[2].accept + rounds[2].major_revision));
}

double eventual_acceptance_rate(double overall_c, double desk_reject) {
    if (!(overall_c >= 0.0 && overall_c <= 1.0) || !(desk_reject >= 0.0 && desk_reject <= 1.0)) {
        throw std::invalid_argument("eventual_acceptance_rate: probabilities must lie in [0, 1]");
    }
    return overall_c * (1.0 - desk_reject);
}

LadderProbabilities analytic_ladder_probabilities(const ScenarioConfig& config) {
    LadderProbabilities out{};
    double mass = 1.0;

    for (int t = tier_index(config.start_tier); t <= tier_index(Tier::T3); ++t) {
        const TierParams& tp = config.tiers[static_cast<std::size_t>(t)];
        const double p = load_adjusted_desk_rate(tp.desk_reject_prob_baseline,
                                                 config.external_load);
        const double stuck = std::pow(p, static_cast<double>(config.desk_retry_limit));
        const double pass = 1.0 - stuck;
        const double c = overall_review_acceptance(tp.rounds);

        if (t < tier_index(Tier::T3)) {
            out.accept_by_tier[static_cast<std::size_t>(t)] = mass * pass * c;
            mass *= stuck + pass * (1.0 - c);
            continue;
        }

        // T3: review rejection feeds a fresh T3 submission until the
        // policy's rejection budget runs out
        const double retry = pass * (1.0 - c);
        double series = 0.0; // sum_{j < n} retry^j, n = rejections until failure
        double tail = 0.0;   // retry^n
        switch (config.t3_review_reject_policy) {
        case T3ReviewRejectPolicy::terminate:
            series = 1.0;
            tail = retry;
            break;
        case T3ReviewRejectPolicy::retry_limit: {
            const double n = static_cast<double>(config.t3_review_reject_limit);
            if (std::abs(1.0 - retry) < 1e-15) {
                series = n;
                tail = 1.0;
            } else {
                tail = std::pow(retry, n);
                series = (1.0 - tail) / (1.0 - retry);
            }
            break;
        }
        case T3ReviewRejectPolicy::unlimited:
            if (1.0 - retry < 1e-15) {
                // cycles forever; the whole mass never resolves to acceptance
                series = 0.0;
                tail = 1.0;
            } else {
                series = 1.0 / (1.0 - retry);
                tail = 0.0;
            }
            break;
        }
        out.accept_by_tier[static_cast<std::size_t>(t)] = mass * pass * c * series;
        out.failure = mass * (stuck * series + tail);
        mass = 0.0;
    }
    return out;
}

std::vector<CalibrationRow> calibration_table(const ScenarioConfig& config,
                                              std::span<const double> loads) {
    std::vector<CalibrationRow> rows;
    rows.reserve(loads.size() * kAllTiers.size());
    for (double load : loads) {
        for (Tier t : kAllTiers) {
            const TierParams& tp = config.tier_params(t);
            CalibrationRow row;
            row.tier = t;
            row.load = load;
            row.desk_reject_effective =
                load_adjusted_desk_rate(tp.desk_reject_prob_baseline, load);
            row.overall_review_acceptance = overall_review_acceptance(tp.rounds);
            row.eventual_acceptance =
                eventual_acceptance_rate(row.overall_review_acceptance,
                                         row.desk_reject_effective);
            rows.push_back(row);
        }
    }
    return rows;
}

std::array<RoundOutcomeProbs, 3> calibrate_round_acceptances(
    double target_eventual, double desk_reject, std::array<RoundOutcomeProbs, 3> rounds) {
    if (!(target_eventual >= 0.0 && target_eventual <= 1.0) ||
        !(desk_reject >= 0.0 && desk_reject < 1.0)) {
        throw std::invalid_argument("calibrate_round_acceptances: bad target or desk rate");
    }
    const double target_c = target_eventual / (1.0 - desk_reject);
    const double a1 = rounds[0].accept;
    const double m1 = rounds[0].major_revision;
    const double m2 = rounds[1].major_revision;
    const double m3 = rounds[2].major_revision;
    if (m1 <= 0.0) {
        throw std::invalid_argument(
            "calibrate_round_acceptances: round-1 major_revision must be > 0");
    }

    // C is linear in a2 given everything else:
    //   C = a1 + m1 * (a2 + m2 * (a3 + m3))
    const auto solve_a2 = [&](double a3) {
        return (target_c - a1) / m1 - m2 * (a3 + m3);
    };

    double a2 = solve_a2(rounds[2].accept);
    if (a2 >= 0.0 && a2 <= 1.0 - m2) {
        rounds[1].accept = a2;
        return rounds;
    }

    // bounds bind: clamp a2 and sweep a3 over its admissible range
    a2 = std::min(std::max(a2, 0.0), 1.0 - m2);
    if (m2 > 0.0) {
        const double a3 = ((target_c - a1) / m1 - a2) / m2 - m3;
        if (a3 >= 0.0 && a3 <= 1.0 - m3) {
            rounds[1].accept = a2;
            rounds[2].accept = a3;
            return rounds;
        }
    }
    throw std::invalid_argument(
        "calibrate_round_acceptances: target unreachable with the fixed revision pattern");
}

} // namespace pubsim
