#pragma once

#include <vector>

#include "gknn/exec.hpp"
#include "gknn/rank_distribution.hpp"
#include "gknn/ranking.hpp"

namespace gknn {

// One stochastic resampling pass: for each step t, rank the training records
// against the query vector, draw a rank from the distribution, and emit that
// neighbor's yield. Rankings may be precomputed once per series and reused
// across runs (they depend only on the query vectors).
std::vector<double> simulate_from_rankings(const std::vector<NeighborRanking>& rankings,
                                           const TrainingSet& ts,
                                           const RankDistribution& rd,
                                           const SeededSampler& sampler);

std::vector<double> gknn_simulate(const std::vector<std::vector<double>>& series,
                                  const TrainingSet& ts,
                                  const MetricSpec& metric,
                                  const RankDistribution& rd,
                                  const SeededSampler& sampler,
                                  Exec exec = Exec::parallel);

} // namespace gknn
