#pragma once

#include <cstdint>
#include <span>

namespace pubsim {

/**
 * Seeded random stream with explicit stream selection.
 *
 * PCG engine (XSL-RR 128/64). A stream is a pure function of
 * (master_seed, stream_id): equal pairs replay bit-identical sequences,
 * distinct stream ids under one master seed select distinct LCG increments
 * and are statistically independent for the sample volumes used here
 * (<= 1e7 draws per stream).
 *
 * Not thread-safe; each stream is owned by one worker at a time. Streams
 * may be created on one thread and consumed on another.
 */
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_id);

    std::uint64_t master_seed() const noexcept { return master_seed_; }
    std::uint64_t stream_id() const noexcept { return stream_id_; }

    /// Next raw 64-bit word.
    std::uint64_t next_u64();

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform();

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi);

    /// True with probability p.
    bool bernoulli(double p);

    /// Standard normal deviate, Box-Muller (fresh pair per call).
    double normal();

private:
    using u128 = unsigned __int128;

    void step();

    u128 state_;
    u128 inc_;
    std::uint64_t master_seed_;
    std::uint64_t stream_id_;
};

/// Pure derivation; consults no global state.
RngStream derive_stream(std::uint64_t master_seed, std::uint64_t stream_id);

/// Poisson draw by inversion (sequential search). Valid for the small
/// lambdas used here; throws std::invalid_argument for lambda < 0,
/// non-finite, or beyond the sampler's range.
int sample_poisson(double lambda, RngStream& rng);

/// Normal(mean, sd) conditioned on being non-negative, realized by
/// rejection (redraw while negative). sd == 0 degenerates to the mean.
/// Throws std::invalid_argument unless mean > 0 and sd >= 0.
double sample_truncated_normal(double mean_months, double sd_months, RngStream& rng);

/// Continuous uniform start month within the 12-month window of a year:
/// [12 * year_index, 12 * year_index + 12).
double sample_start_offset(int year_index, int horizon_years, RngStream& rng);

/// Index i with probability probs[i]. Probabilities must each lie in
/// [0, 1] and sum to 1 within 1e-9.
int sample_categorical(std::span<const double> probs, RngStream& rng);

} // namespace pubsim
