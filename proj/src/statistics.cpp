#include "pubsim/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pubsim {

long Histogram::total() const noexcept {
    long n = 0;
    for (const auto& b : bins) {
        n += b.count;
    }
    return n;
}

SummaryStats summarize(std::span<const double> values) {
    SummaryStats s;
    s.n = static_cast<long>(values.size());
    if (s.n == 0) {
        return s;
    }

    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());

    // accumulate over the sorted copy so the result does not depend on the
    // caller's element order
    double sum = 0.0;
    for (double v : sorted) {
        sum += v;
    }
    s.mean = sum / static_cast<double>(s.n);

    double sq = 0.0;
    for (double v : sorted) {
        const double d = v - s.mean;
        sq += d * d;
    }
    s.sd = s.n > 1 ? std::sqrt(sq / static_cast<double>(s.n - 1)) : 0.0;

    const std::size_t mid = sorted.size() / 2;
    s.median = sorted.size() % 2 == 1 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
    s.min = sorted.front();
    s.max = sorted.back();
    return s;
}

Histogram histogram(std::span<const double> values, double bin_width) {
    if (!(bin_width > 0.0)) {
        throw std::invalid_argument("histogram: bin_width must be > 0");
    }
    Histogram h;
    h.bin_width = bin_width;
    if (values.empty()) {
        return h;
    }

    long max_bin = 0;
    std::vector<long> indices;
    indices.reserve(values.size());
    for (double v : values) {
        if (v < 0.0) {
            throw std::invalid_argument("histogram: values must be >= 0 (origin is 0)");
        }
        const long k = static_cast<long>(std::floor(v / bin_width));
        indices.push_back(k);
        max_bin = std::max(max_bin, k);
    }

    h.bins.resize(static_cast<std::size_t>(max_bin) + 1);
    for (long k = 0; k <= max_bin; ++k) {
        h.bins[static_cast<std::size_t>(k)].lower_edge = static_cast<double>(k) * bin_width;
    }
    for (long k : indices) {
        ++h.bins[static_cast<std::size_t>(k)].count;
    }
    return h;
}

} // namespace pubsim
