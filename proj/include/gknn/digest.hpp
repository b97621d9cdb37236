#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gknn/metric.hpp"
#include "gknn/rank_distribution.hpp"
#include "gknn/training.hpp"

namespace gknn {

inline constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;

std::uint64_t fnv1a64(const void* data, std::size_t len,
                      std::uint64_t h = kFnvOffset);
std::uint64_t fnv1a64_file(const std::string& path);
std::string digest_hex(std::uint64_t h);

std::uint64_t digest_training(const TrainingSet& ts);
std::uint64_t digest_metric(const MetricSpec& metric);
std::uint64_t digest_distribution(const RankDistribution& rd);
std::uint64_t digest_series(const std::vector<std::vector<double>>& series);

// Provenance token shared by analytic reports, ensembles and frequency
// estimates built from the same inputs.
std::uint64_t model_digest(const TrainingSet& ts, const MetricSpec& metric,
                           const RankDistribution& rd);
std::uint64_t problem_digest(const std::vector<std::vector<double>>& series,
                             const TrainingSet& ts, const MetricSpec& metric,
                             const RankDistribution& rd);

} // namespace gknn
