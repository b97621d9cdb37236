#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gknn/analytics.hpp"
#include "gknn/exec.hpp"

namespace gknn {

// Monte Carlo aggregates over R independent runs. Sample variances use the
// unbiased (R-1) denominator; standard errors are sample SD / sqrt(R). The
// fourth central moments feed the variance z-scores in compare_to_analytic.
// Annual fields are NaN when the series length is not a multiple of 12.
struct EnsembleResult {
    std::size_t runs = 0;
    std::vector<double> per_t_mean;
    std::vector<double> per_t_var;
    std::vector<double> per_t_se;
    std::vector<double> per_t_m4;
    // Mean / SE of the squared deviation from the actual yields, when given.
    std::vector<double> per_t_sq_err_mean;
    std::vector<double> per_t_sq_err_se;
    double annual_mean = 0.0;
    double annual_var = 0.0;
    double annual_se = 0.0;
    double annual_m4 = 0.0;
    std::uint64_t provenance = 0;
};

// Runs r = 1..R with run_index = r. Every (run, t) draw is a pure function of
// the master seed, and aggregation always reduces in index order, so parallel
// and serial execution produce bit-identical results.
EnsembleResult run_ensemble(const std::vector<std::vector<double>>& series,
                            const TrainingSet& ts, const MetricSpec& metric,
                            const RankDistribution& rd, std::uint64_t seed,
                            std::size_t runs,
                            const std::vector<double>* actual = nullptr,
                            Exec exec = Exec::parallel);

struct ComparisonRow {
    std::string quantity;
    std::size_t t = 0; // 0 for annual-scale rows
    double analytic = 0.0;
    double empirical = 0.0;
    double se = 0.0;
    double z = 0.0;
    bool flagged = false;
};

struct ComparisonTable {
    std::vector<ComparisonRow> rows;
    double threshold = 4.0;
    bool any_flagged = false;
};

// Z-scores the ensemble against the closed-form report. Throws if the two
// were built from different inputs. A zero-SE quantity is flagged unless the
// difference is exactly zero.
ComparisonTable compare_to_analytic(const EnsembleResult& ensemble,
                                    const MomentReport& analytic,
                                    double z_threshold = 4.0);

} // namespace gknn
