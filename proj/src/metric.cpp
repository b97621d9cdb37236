#include "gknn/metric.hpp"

#include <cmath>
#include <stdexcept>

namespace gknn {

MetricSpec MetricSpec::weighted_manhattan(std::vector<double> w, bool filter) {
    for (double x : w) {
        if (!std::isfinite(x) || x < 0.0) {
            throw std::invalid_argument("manhattan weights must be finite and >= 0");
        }
    }
    MetricSpec m;
    m.kind = Kind::weighted_manhattan;
    m.weights = std::move(w);
    m.month_filter = filter;
    return m;
}

MetricSpec MetricSpec::std_normalized_euclidean() {
    MetricSpec m;
    m.kind = Kind::std_normalized_euclidean;
    return m;
}

MetricSpec MetricSpec::component_abs_diff(std::size_t index) {
    MetricSpec m;
    m.kind = Kind::component_abs_diff;
    m.component = index;
    return m;
}

double metric_distance(const MetricSpec& spec, const std::vector<double>& a,
                       const std::vector<double>& b,
                       const std::vector<double>& column_sd) {
    switch (spec.kind) {
    case MetricSpec::Kind::weighted_manhattan: {
        double d = 0.0;
        for (std::size_t p = 1; p < a.size(); ++p) {
            d += spec.weights[p - 1] * std::fabs(a[p] - b[p]);
        }
        return d;
    }
    case MetricSpec::Kind::std_normalized_euclidean: {
        double s = 0.0;
        for (std::size_t p = 0; p < a.size(); ++p) {
            const double sd = column_sd[p];
            if (sd > 0.0) { // constant columns carry no information
                const double d = (a[p] - b[p]) / sd;
                s += d * d;
            }
        }
        return std::sqrt(s);
    }
    case MetricSpec::Kind::component_abs_diff:
        return std::fabs(a[spec.component] - b[spec.component]);
    }
    throw std::logic_error("unknown metric kind");
}

} // namespace gknn
