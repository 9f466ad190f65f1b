#include "pubsim/rng.hpp"

#include <doctest.h>

#include <stdexcept>

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

using namespace pubsim;

TEST_CASE("equal (master_seed, stream_id) replays the exact sequence") {
    RngStream a = derive_stream(42, 0);
    RngStream b = derive_stream(42, 0);
    for (int i = 0; i < 1000; ++i) {
        CHECK(a.next_u64() == b.next_u64());
    }
}

TEST_CASE("distinct stream ids diverge") {
    RngStream a = derive_stream(42, 0);
    RngStream b = derive_stream(42, 1);
    bool differ = false;
    for (int i = 0; i < 10000; ++i) {
        if (a.uniform() != b.uniform()) {
            differ = true;
            break;
        }
    }
    CHECK(differ);
}

TEST_CASE("derivation is a pure function of both inputs") {
    const std::uint64_t first = derive_stream(42, 7).next_u64();
    CHECK(derive_stream(42, 7).next_u64() == first);
    CHECK(derive_stream(43, 7).next_u64() != first);
}

TEST_CASE("uniform stays in [0, 1)") {
    RngStream rng(1, 2);
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("poisson sampler") {
    RngStream rng(7, 0);

    SUBCASE("lambda 0 is identically 0") {
        for (int i = 0; i < 100; ++i) {
            CHECK(sample_poisson(0.0, rng) == 0);
        }
    }
    SUBCASE("rejects bad lambda") {
        CHECK_THROWS_AS(sample_poisson(-1.0, rng), std::invalid_argument);
        CHECK_THROWS_AS(sample_poisson(std::nan(""), rng), std::invalid_argument);
        CHECK_THROWS_AS(sample_poisson(1e9, rng), std::invalid_argument);
    }
    SUBCASE("mean converges to lambda") {
        const long n = 1000000;
        double sum = 0.0;
        for (long i = 0; i < n; ++i) {
            sum += sample_poisson(2.0, rng);
        }
        CHECK(sum / n == doctest::Approx(2.0).epsilon(0.005)); // 2 +/- 0.01
    }
    SUBCASE("P(0) matches the pmf at lambda 1") {
        const long n = 1000000;
        long zeros = 0;
        for (long i = 0; i < n; ++i) {
            if (sample_poisson(1.0, rng) == 0) ++zeros;
        }
        CHECK(std::abs(static_cast<double>(zeros) / n - std::exp(-1.0)) < 0.002);
    }
}

namespace {

// independent closed form: mean of N(mu, sigma) conditioned on >= 0
double truncated_mean(double mu, double sigma) {
    const double alpha = -mu / sigma;
    const double phi = std::exp(-0.5 * alpha * alpha) / std::sqrt(2.0 * std::numbers::pi);
    const double mass = 0.5 * std::erfc(alpha / std::sqrt(2.0));
    return mu + sigma * phi / mass;
}

} // namespace

TEST_CASE("truncated normal sampler") {
    RngStream rng(11, 3);

    SUBCASE("degenerate sd returns the mean exactly") {
        CHECK(sample_truncated_normal(6.0, 0.0, rng) == 6.0);
    }
    SUBCASE("rejects bad parameters") {
        CHECK_THROWS_AS(sample_truncated_normal(6.0, -0.1, rng), std::invalid_argument);
        CHECK_THROWS_AS(sample_truncated_normal(0.0, 1.0, rng), std::invalid_argument);
        CHECK_THROWS_AS(sample_truncated_normal(-2.0, 1.0, rng), std::invalid_argument);
    }
    SUBCASE("never negative") {
        for (long i = 0; i < 1000000; ++i) {
            CHECK(sample_truncated_normal(6.0, 1.5, rng) >= 0.0);
        }
    }
    SUBCASE("mean matches the closed form where truncation bites") {
        const long n = 1000000;
        double sum = 0.0;
        for (long i = 0; i < n; ++i) {
            sum += sample_truncated_normal(1.5, 0.5, rng);
        }
        CHECK(std::abs(sum / n - truncated_mean(1.5, 0.5)) < 0.005);
    }
}

TEST_CASE("start offset sampler") {
    RngStream rng(5, 9);

    SUBCASE("year windows") {
        for (int i = 0; i < 10000; ++i) {
            const double x0 = sample_start_offset(0, 6, rng);
            CHECK(x0 >= 0.0);
            CHECK(x0 < 12.0);
            const double x3 = sample_start_offset(3, 6, rng);
            CHECK(x3 >= 36.0);
            CHECK(x3 < 48.0);
        }
    }
    SUBCASE("out of range years throw") {
        CHECK_THROWS_AS(sample_start_offset(-1, 6, rng), std::invalid_argument);
        CHECK_THROWS_AS(sample_start_offset(6, 6, rng), std::invalid_argument);
    }
    SUBCASE("mean sits at the window midpoint") {
        const long n = 1000000;
        double sum = 0.0;
        for (long i = 0; i < n; ++i) {
            sum += sample_start_offset(0, 6, rng);
        }
        CHECK(std::abs(sum / n - 6.0) < 0.01);
    }
}

TEST_CASE("categorical sampler") {
    RngStream rng(23, 1);

    SUBCASE("point masses") {
        const std::array<double, 3> first{1.0, 0.0, 0.0};
        const std::array<double, 3> last{0.0, 0.0, 1.0};
        for (int i = 0; i < 1000; ++i) {
            CHECK(sample_categorical(first, rng) == 0);
            CHECK(sample_categorical(last, rng) == 2);
        }
    }
    SUBCASE("rejects malformed vectors") {
        CHECK_THROWS_AS(sample_categorical(std::array<double, 2>{0.5, 0.4}, rng),
                        std::invalid_argument);
        CHECK_THROWS_AS(sample_categorical(std::array<double, 2>{1.2, -0.2}, rng),
                        std::invalid_argument);
        CHECK_THROWS_AS(sample_categorical(std::span<const double>{}, rng),
                        std::invalid_argument);
    }
    SUBCASE("frequencies converge") {
        const std::array<double, 3> probs{0.2, 0.3, 0.5};
        std::array<long, 3> counts{};
        const long n = 1000000;
        for (long i = 0; i < n; ++i) {
            ++counts[static_cast<std::size_t>(sample_categorical(probs, rng))];
        }
        for (std::size_t i = 0; i < probs.size(); ++i) {
            CHECK(std::abs(static_cast<double>(counts[i]) / n - probs[i]) < 0.005);
        }
    }
}
