#include "aras/report/anomaly.hpp"

#include <cmath>
#include <deque>

#include "aras/errors.hpp"

namespace aras::report {

std::string_view to_string(MetricSeries s) {
    switch (s) {
        case MetricSeries::Sent: return "sent";
        case MetricSeries::Received: return "received";
        case MetricSeries::Dropped: return "dropped";
        default: return "energy_mj";
    }
}

std::vector<AnomalyFlag> detect_anomalies(const std::vector<MetricSample>& series,
                                          std::uint32_t window, double k,
                                          std::optional<double> absolute) {
    if (window < 2) throw BadWindowError("window must be at least 2");
    std::vector<AnomalyFlag> flags;
    std::deque<double> recent;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (const MetricSample& sample : series) {
        double x = sample.value;
        bool flagged = false;
        AnomalyBound bound;
        // The first `window` samples seed the history and are never flagged.
        if (recent.size() >= window) {
            if (absolute && x > *absolute) {
                flagged = true;
                bound.absolute = true;
                bound.threshold = *absolute;
            } else {
                double n = static_cast<double>(recent.size());
                double mean = sum / n;
                double variance = std::max(0.0, sum_sq / n - mean * mean);
                double std_dev = std::sqrt(variance);
                if (std::abs(x - mean) > k * std_dev) {
                    flagged = true;
                    bound = {false, mean, std_dev, k, 0.0};
                }
            }
        }
        if (flagged)
            flags.push_back({sample.node, std::string(to_string(sample.series)), sample.t_us, x,
                             bound});
        recent.push_back(x);
        sum += x;
        sum_sq += x * x;
        if (recent.size() > window) {
            double old = recent.front();
            recent.pop_front();
            sum -= old;
            sum_sq -= old * old;
        }
    }
    return flags;
}

}  // namespace aras::report
