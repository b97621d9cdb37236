#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gknn/exec.hpp"
#include "gknn/rank_distribution.hpp"
#include "gknn/ranking.hpp"
#include "gknn/simulate.hpp"

namespace gknn {

// Closed-form per-step moments of the resampled yield. bias_sq and
// expected_error are present only when an actual yield was supplied; the
// decomposition expected_error = variance + bias_sq holds exactly.
struct MonthMoments {
    std::size_t t = 0; // 1-based time step
    double expected_yield = 0.0;
    double variance = 0.0;
    std::optional<double> bias_sq;
    std::optional<double> expected_error;
};

// Annual-scale moments over m years (series length 12m). The variance bound
// Var(Y) <= C/m uses the constant C = 12 * sum over realized ranking classes
// of the per-class yield variance.
struct AnnualMoments {
    std::size_t years = 0;
    double expected_annual_yield = 0.0;
    double annual_variance = 0.0;
    double variance_constant = 0.0; // C
    bool bound_ok = false;
    double total_yield_variance = 0.0; // m^2 * Var(Y)
};

struct MomentReport {
    std::vector<MonthMoments> months;
    AnnualMoments annual;
    std::uint64_t provenance = 0;
};

// Mean and variance of the yield drawn through one fixed neighbor ranking.
// `prefix` is the first support_size entries of a ranking order; it fully
// determines both moments.
struct ClassMoments {
    double mean = 0.0;
    double variance = 0.0;
};
ClassMoments ranking_class_moments(const std::vector<std::uint32_t>& prefix,
                                   const TrainingSet& ts,
                                   const RankDistribution& rd);

double expected_month_yield(const NeighborRanking& ranking, const TrainingSet& ts,
                            const RankDistribution& rd);
double month_variance(const NeighborRanking& ranking, const TrainingSet& ts,
                      const RankDistribution& rd);

// Expected squared deviation from the actual yield, split into the variance
// (spread) term and the squared-bias term.
MonthMoments expected_month_error(const NeighborRanking& ranking, const TrainingSet& ts,
                                  const RankDistribution& rd, double actual_yield,
                                  std::size_t t = 0);

double total_expected_error(const std::vector<std::vector<double>>& series,
                            const TrainingSet& ts, const MetricSpec& metric,
                            const RankDistribution& rd,
                            const std::vector<double>& actual,
                            Exec exec = Exec::parallel);

// Yield variance induced at an arbitrary predictor vector: the spread of the
// neighborhood around its own mean, independent of any actual yield.
double base_error_map(const std::vector<double>& v, const TrainingSet& ts,
                      const MetricSpec& metric, const RankDistribution& rd);

AnnualMoments annual_moments(const std::vector<std::vector<double>>& series,
                             const TrainingSet& ts, const MetricSpec& metric,
                             const RankDistribution& rd, Exec exec = Exec::parallel);
AnnualMoments annual_moments_from_rankings(const std::vector<NeighborRanking>& rankings,
                                           const TrainingSet& ts,
                                           const RankDistribution& rd);

// Per-step and annual moments in one pass. `actual` may be null; series
// length must be a positive multiple of 12.
MomentReport moment_report(const std::vector<std::vector<double>>& series,
                           const TrainingSet& ts, const MetricSpec& metric,
                           const RankDistribution& rd,
                           const std::vector<double>* actual = nullptr,
                           Exec exec = Exec::parallel);

} // namespace gknn
