#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gknn/analytics.hpp"
#include "gknn/exec.hpp"

namespace gknn {

// Long-run visit frequencies of the ranking classes realized by a query
// series. Two steps fall in the same class when their rankings share the
// first support_size indices, which is all any moment formula consumes.
struct EmpiricalDistribution {
    struct ClassStat {
        std::size_t count = 0;
        double frequency = 0.0;
    };

    std::map<std::vector<std::uint32_t>, ClassStat> classes;
    std::size_t series_length = 0;
    std::uint64_t training_digest = 0;
    std::uint64_t distribution_digest = 0;
    std::uint64_t model_digest = 0; // includes the metric
};

EmpiricalDistribution estimate_nu(const std::vector<std::vector<double>>& series,
                                  const TrainingSet& ts, const MetricSpec& metric,
                                  const RankDistribution& rd,
                                  Exec exec = Exec::parallel);

// Long-run average annual yield: 12 * sum over classes of frequency * class
// mean. Equals the finite-series annual expectation when the frequencies come
// from that same series.
double limit_annual_yield(const EmpiricalDistribution& nu, const TrainingSet& ts,
                          const RankDistribution& rd);

// Long-run value of (years * annual variance): 12 * sum over classes of
// frequency * class variance.
double limit_m_var(const EmpiricalDistribution& nu, const TrainingSet& ts,
                   const RankDistribution& rd);

} // namespace gknn
