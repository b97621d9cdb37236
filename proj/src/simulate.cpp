#include "gknn/simulate.hpp"

#include <stdexcept>
#include <string>

namespace gknn {

std::vector<double> simulate_from_rankings(const std::vector<NeighborRanking>& rankings,
                                           const TrainingSet& ts,
                                           const RankDistribution& rd,
                                           const SeededSampler& sampler) {
    if (rd.size() != ts.size()) {
        throw std::invalid_argument("rank distribution size must equal the training "
                                    "set size");
    }
    std::vector<double> y(rankings.size());
    for (std::size_t t = 0; t < rankings.size(); ++t) {
        const NeighborRanking& r = rankings[t];
        if (rd.support_size() > r.order.size()) {
            throw std::invalid_argument(
                "distribution support (" + std::to_string(rd.support_size()) +
                ") exceeds the candidate count (" + std::to_string(r.order.size()) +
                ") at step " + std::to_string(t + 1));
        }
        const std::size_t rank = sample_rank(rd, sampler, static_cast<std::uint64_t>(t + 1));
        y[t] = ts.yield(r.order[rank]);
    }
    return y;
}

std::vector<double> gknn_simulate(const std::vector<std::vector<double>>& series,
                                  const TrainingSet& ts, const MetricSpec& metric,
                                  const RankDistribution& rd,
                                  const SeededSampler& sampler, Exec exec) {
    if (series.empty()) {
        throw std::invalid_argument("query series must not be empty");
    }
    return simulate_from_rankings(rank_series(series, ts, metric, exec), ts, rd, sampler);
}

} // namespace gknn
