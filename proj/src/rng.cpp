#include "pubsim/rng.hpp"

#include <bit>
#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pubsim {

namespace {

// splitmix64 finalizer; used only to expand seeds into engine state.
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
    : master_seed_(master_seed), stream_id_(stream_id) {
    const std::uint64_t a = mix64(master_seed);
    const std::uint64_t b = mix64(master_seed ^ std::rotl(stream_id, 31));
    const std::uint64_t c = mix64(stream_id);
    const std::uint64_t d = mix64(stream_id ^ std::rotl(master_seed, 17));
    const u128 initstate = (u128(a) << 64) | b;
    const u128 initseq = (u128(c) << 64) | d;

    state_ = 0;
    inc_ = (initseq << 1) | 1;
    step();
    state_ += initstate;
    step();
}

void RngStream::step() {
    // PCG reference 128-bit LCG multiplier.
    constexpr u128 mult = (u128(2549297995355413924ULL) << 64) | 4865540595714422341ULL;
    state_ = state_ * mult + inc_;
}

std::uint64_t RngStream::next_u64() {
    // XSL-RR output permutation on the pre-advance state.
    const u128 s = state_;
    step();
    const int rot = static_cast<int>(s >> 122);
    const std::uint64_t xored =
        static_cast<std::uint64_t>(s >> 64) ^ static_cast<std::uint64_t>(s);
    return std::rotr(xored, rot);
}

double RngStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
    return lo + uniform() * (hi - lo);
}

bool RngStream::bernoulli(double p) {
    return uniform() < p;
}

double RngStream::normal() {
    const double u1 = 1.0 - uniform(); // (0, 1], keeps log finite
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

RngStream derive_stream(std::uint64_t master_seed, std::uint64_t stream_id) {
    return RngStream(master_seed, stream_id);
}

int sample_poisson(double lambda, RngStream& rng) {
    if (!std::isfinite(lambda) || lambda < 0.0) {
        throw std::invalid_argument("sample_poisson: lambda must be finite and >= 0");
    }
    if (lambda > 500.0) {
        // exp(-lambda) underflows long before this; sequential search is
        // only meant for the small rates this model uses
        throw std::invalid_argument("sample_poisson: lambda too large for sequential search");
    }
    if (lambda == 0.0) {
        return 0;
    }
    const double u = rng.uniform();
    double p = std::exp(-lambda);
    double cum = p;
    int k = 0;
    while (u > cum) {
        ++k;
        p *= lambda / k;
        cum += p;
        if (p <= 0.0) {
            break; // fp underflow in the extreme tail
        }
    }
    return k;
}

double sample_truncated_normal(double mean_months, double sd_months, RngStream& rng) {
    if (!std::isfinite(mean_months) || !std::isfinite(sd_months) || mean_months <= 0.0 ||
        sd_months < 0.0) {
        throw std::invalid_argument("sample_truncated_normal: require mean > 0 and sd >= 0");
    }
    if (sd_months == 0.0) {
        return mean_months;
    }
    double x;
    do {
        x = mean_months + sd_months * rng.normal();
    } while (x < 0.0);
    assert(x >= 0.0);
    return x;
}

double sample_start_offset(int year_index, int horizon_years, RngStream& rng) {
    if (year_index < 0 || year_index >= horizon_years) {
        throw std::invalid_argument("sample_start_offset: year_index outside horizon");
    }
    return rng.uniform(12.0 * year_index, 12.0 * year_index + 12.0);
}

int sample_categorical(std::span<const double> probs, RngStream& rng) {
    if (probs.empty()) {
        throw std::invalid_argument("sample_categorical: empty probability vector");
    }
    double sum = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument("sample_categorical: probability outside [0, 1]");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw std::invalid_argument("sample_categorical: probabilities must sum to 1");
    }
    const double u = rng.uniform();
    double cum = 0.0;
    for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
        cum += probs[i];
        if (u < cum) {
            return static_cast<int>(i);
        }
    }
    return static_cast<int>(probs.size() - 1);
}

} // namespace pubsim
