#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gknn/exec.hpp"
#include "gknn/metric.hpp"
#include "gknn/rank_distribution.hpp"
#include "gknn/training.hpp"

namespace gknn {

// The resampler's one-step law as a kernel: for a predictor vector v the
// yield distribution is the discrete measure placing p_i on the yield of the
// i-th nearest training record. mass(v, a, b) evaluates it on an open
// interval.
class DiscreteKernel {
public:
    DiscreteKernel(TrainingSet ts, MetricSpec metric, RankDistribution rd);

    double mass(const std::vector<double>& v, double a, double b) const;

    const TrainingSet& training() const noexcept { return ts_; }
    const RankDistribution& distribution() const noexcept { return rd_; }
    const MetricSpec& metric() const noexcept { return metric_; }

private:
    TrainingSet ts_;
    MetricSpec metric_;
    RankDistribution rd_;
};

double eval_discrete_kernel(const DiscreteKernel& kernel, const std::vector<double>& v,
                            double a, double b);

// Reference process with a known continuous conditional law: given v in
// [0,1], the yield is exponential with mean 1 + v, so the conditional CDF is
// psi(v, y) = 1 - exp(-y / (1 + v)) with a closed-form inverse.
struct SyntheticProcess {
    double cdf(double v, double y) const;
    double quantile(double v, double rho) const;
};

struct SyntheticSeries {
    std::vector<std::vector<double>> predictors; // one-component vectors
    std::vector<double> yields;
};

// v_t and rho_t are i.i.d. uniform draws from the counter stream keyed by
// (seed, t); yields come from the inverse conditional CDF.
SyntheticSeries generate_synthetic_series(const SyntheticProcess& process,
                                          std::size_t length, std::uint64_t seed);

struct EvalGrid {
    std::vector<double> v_points;
    std::vector<std::pair<double, double>> intervals;

    // v in {0.1, 0.3, 0.5, 0.7, 0.9}; all a < b with endpoints from
    // {0, 0.5, 1, 2, 4}.
    static EvalGrid standard();
};

struct KernelErrorRow {
    std::size_t n = 0;
    std::size_t k_n = 0;
    std::uint64_t seed = 0;
    double sup_error = 0.0;
    double mean_error = 0.0;
};

// For each seed, generates one synthetic sequence; for each N, trains the
// empirical kernel on the first N pairs with k_N = floor(sqrt(N)) uniform
// top-k probabilities and reports its worst and mean absolute deviation from
// the exact conditional law over the grid. Rows are ordered by (N, seed).
std::vector<KernelErrorRow> convergence_experiment(const SyntheticProcess& process,
                                                   const std::vector<std::size_t>& n_values,
                                                   const std::vector<std::uint64_t>& seeds,
                                                   const EvalGrid& grid,
                                                   Exec exec = Exec::parallel);

} // namespace gknn
