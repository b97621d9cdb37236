#include "gknn/ranking.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gknn {

NeighborRanking rank_neighbors(const std::vector<double>& query,
                               const TrainingSet& ts, const MetricSpec& metric) {
    if (query.size() != ts.dimension()) {
        throw std::invalid_argument("query dimension " + std::to_string(query.size()) +
                                    " does not match training dimension " +
                                    std::to_string(ts.dimension()));
    }
    if (metric.kind == MetricSpec::Kind::weighted_manhattan &&
        metric.weights.size() + 1 != ts.dimension()) {
        throw std::invalid_argument("manhattan weight count must equal the number of "
                                    "non-label components");
    }
    if (metric.kind == MetricSpec::Kind::component_abs_diff &&
        metric.component >= ts.dimension()) {
        throw std::invalid_argument("metric component index out of range");
    }

    std::vector<std::uint32_t> candidates;
    if (metric.month_filter) {
        for (std::size_t i = 0; i < ts.size(); ++i) {
            if (ts.record(i).predictor[0] == query[0]) {
                candidates.push_back(static_cast<std::uint32_t>(i));
            }
        }
        if (candidates.empty()) {
            throw std::invalid_argument("no training records match month label " +
                                        std::to_string(query[0]));
        }
    } else {
        candidates.resize(ts.size());
        std::iota(candidates.begin(), candidates.end(), 0u);
    }

    const std::vector<double>& sd = ts.column_stddevs();
    std::vector<double> dist(candidates.size());
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        dist[c] = metric_distance(metric, query, ts.record(candidates[c]).predictor, sd);
    }

    std::vector<std::uint32_t> pos(candidates.size());
    std::iota(pos.begin(), pos.end(), 0u);
    std::sort(pos.begin(), pos.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (dist[a] != dist[b]) return dist[a] < dist[b];
        return candidates[a] < candidates[b]; // stable tie-break by original index
    });

    NeighborRanking r;
    r.order.resize(pos.size());
    r.distances.resize(pos.size());
    for (std::size_t i = 0; i < pos.size(); ++i) {
        r.order[i] = candidates[pos[i]];
        r.distances[i] = dist[pos[i]];
    }
    return r;
}

std::vector<NeighborRanking> rank_series(const std::vector<std::vector<double>>& series,
                                         const TrainingSet& ts,
                                         const MetricSpec& metric, Exec exec) {
    std::vector<NeighborRanking> out(series.size());
    if (exec == Exec::parallel) {
        std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 16)
        for (long long i = 0; i < static_cast<long long>(series.size()); ++i) {
            if (error) continue;
            try {
                out[static_cast<std::size_t>(i)] =
                    rank_neighbors(series[static_cast<std::size_t>(i)], ts, metric);
            } catch (...) {
#pragma omp critical
                if (!error) error = std::current_exception();
            }
        }
        if (error) std::rethrow_exception(error);
    } else {
        for (std::size_t i = 0; i < series.size(); ++i) {
            out[i] = rank_neighbors(series[i], ts, metric);
        }
    }
    return out;
}

} // namespace gknn
