#pragma once

#include <span>
#include <vector>

namespace pubsim {

/// Summary of a numeric series. n == 0 is the explicit empty marker; all
/// other fields are zero in that case (never NaN).
struct SummaryStats {
    long n = 0;
    double mean = 0.0;
    double median = 0.0;
    double sd = 0.0; // sample standard deviation, divisor n - 1; 0 for n <= 1
    double min = 0.0;
    double max = 0.0;

    bool empty() const noexcept { return n == 0; }
};

struct HistogramBin {
    double lower_edge = 0.0;
    long count = 0;
};

/// Half-open bins [k*w, (k+1)*w) anchored at 0, contiguous from 0 through
/// the last occupied bin. Counts conserve the input length.
struct Histogram {
    double bin_width = 1.0;
    std::vector<HistogramBin> bins;

    long total() const noexcept;
};

/// Mean / median / sample sd / min / max. Median of an even-length series
/// is the midpoint of the two middle elements. Internally sorts a copy, so
/// the result is invariant under permutation of the input.
SummaryStats summarize(std::span<const double> values);

/// Bin non-negative values at the given width. Throws std::invalid_argument
/// for width <= 0 or negative values.
Histogram histogram(std::span<const double> values, double bin_width);

} // namespace pubsim
