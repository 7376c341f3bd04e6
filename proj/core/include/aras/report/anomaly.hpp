#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aras::report {

enum class MetricSeries { Sent, Received, Dropped, EnergyMj };
std::string_view to_string(MetricSeries s);

struct MetricSample {
    std::uint64_t t_us = 0;
    std::string node;
    MetricSeries series = MetricSeries::Sent;
    double value = 0.0;  // per-interval delta
};

struct AnomalyBound {
    bool absolute = false;  // true: value exceeded the absolute threshold
    double mean = 0.0;      // rolling stats over the previous window
    double std_dev = 0.0;
    double k = 0.0;
    double threshold = 0.0;  // the absolute threshold when absolute
};

struct AnomalyFlag {
    std::string node;
    std::string series;
    std::uint64_t t_us = 0;
    double value = 0.0;
    AnomalyBound bound;
};

// Flags sample x when |x - mean(previous window)| > k * std(previous window)
// (population std) or when x exceeds the absolute threshold. The first
// `window` samples are never flagged by the rolling rule. The input is one
// series in time order. Throws BadWindowError when window < 2.
std::vector<AnomalyFlag> detect_anomalies(const std::vector<MetricSample>& series,
                                          std::uint32_t window, double k,
                                          std::optional<double> absolute = std::nullopt);

}  // namespace aras::report
