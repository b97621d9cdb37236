#pragma once

#include <cstdint>
#include <vector>

#include "gknn/exec.hpp"
#include "gknn/metric.hpp"
#include "gknn/training.hpp"

namespace gknn {

// Candidate training indices ordered by (distance, original index). With a
// month filter the candidate set is the matching-label subset; otherwise all
// records. `distances` is non-decreasing and aligned with `order`.
struct NeighborRanking {
    std::vector<std::uint32_t> order;
    std::vector<double> distances;
};

NeighborRanking rank_neighbors(const std::vector<double>& query,
                               const TrainingSet& ts,
                               const MetricSpec& metric);

// Rankings for a whole query series. Rows are independent; the parallel path
// fills them with OpenMP and is bit-identical to the serial reference.
std::vector<NeighborRanking> rank_series(const std::vector<std::vector<double>>& series,
                                         const TrainingSet& ts,
                                         const MetricSpec& metric,
                                         Exec exec = Exec::parallel);

} // namespace gknn
