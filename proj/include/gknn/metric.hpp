#pragma once

#include <cstddef>
#include <vector>

#include "gknn/training.hpp"

namespace gknn {

// Distance between predictor vectors. Component 0 is treated as the month
// label wherever a schema carries one: weighted_manhattan skips it and
// month_filter restricts neighbor candidates to records whose component 0
// equals the query's.
struct MetricSpec {
    enum class Kind {
        weighted_manhattan,       // sum of w_p * |a_p - b_p| over non-label components
        std_normalized_euclidean, // sqrt(sum of ((a_p - b_p)/s_p)^2); s_p = 0 columns drop out
        component_abs_diff        // |a_c - b_c| for one component
    };

    Kind kind = Kind::component_abs_diff;
    std::vector<double> weights; // weighted_manhattan: one weight per non-label component
    std::size_t component = 0;   // component_abs_diff
    bool month_filter = false;

    static MetricSpec weighted_manhattan(std::vector<double> w, bool filter = true);
    static MetricSpec std_normalized_euclidean();
    static MetricSpec component_abs_diff(std::size_t index);
};

// Evaluates the metric. `column_sd` is only consulted by the normalized
// Euclidean variant. Vectors must share the dimensionality validated by
// rank_neighbors.
double metric_distance(const MetricSpec& spec,
                       const std::vector<double>& a,
                       const std::vector<double>& b,
                       const std::vector<double>& column_sd);

} // namespace gknn
