#include "gknn/class_distribution.hpp"

#include <stdexcept>

#include "gknn/digest.hpp"

namespace gknn {

namespace {

void check_provenance(const EmpiricalDistribution& nu, const TrainingSet& ts,
                      const RankDistribution& rd) {
    if (nu.training_digest != digest_training(ts) ||
        nu.distribution_digest != digest_distribution(rd)) {
        throw std::invalid_argument("frequency estimate was built from a different "
                                    "training set or rank distribution");
    }
}

} // namespace

EmpiricalDistribution estimate_nu(const std::vector<std::vector<double>>& series,
                                  const TrainingSet& ts, const MetricSpec& metric,
                                  const RankDistribution& rd, Exec exec) {
    if (series.empty()) {
        throw std::invalid_argument("query series must not be empty");
    }
    const auto rankings = rank_series(series, ts, metric, exec);

    EmpiricalDistribution nu;
    nu.series_length = series.size();
    for (const NeighborRanking& r : rankings) {
        if (rd.support_size() > r.order.size()) {
            throw std::invalid_argument("distribution support exceeds the candidate "
                                        "count");
        }
        std::vector<std::uint32_t> key(
            r.order.begin(),
            r.order.begin() + static_cast<std::ptrdiff_t>(rd.support_size()));
        ++nu.classes[key].count;
    }
    for (auto& [key, stat] : nu.classes) {
        stat.frequency =
            static_cast<double>(stat.count) / static_cast<double>(series.size());
    }
    nu.training_digest = digest_training(ts);
    nu.distribution_digest = digest_distribution(rd);
    nu.model_digest = gknn::model_digest(ts, metric, rd);
    return nu;
}

double limit_annual_yield(const EmpiricalDistribution& nu, const TrainingSet& ts,
                          const RankDistribution& rd) {
    check_provenance(nu, ts, rd);
    double s = 0.0;
    for (const auto& [key, stat] : nu.classes) {
        s += stat.frequency * ranking_class_moments(key, ts, rd).mean;
    }
    return 12.0 * s;
}

double limit_m_var(const EmpiricalDistribution& nu, const TrainingSet& ts,
                   const RankDistribution& rd) {
    check_provenance(nu, ts, rd);
    double s = 0.0;
    for (const auto& [key, stat] : nu.classes) {
        s += stat.frequency * ranking_class_moments(key, ts, rd).variance;
    }
    return 12.0 * s;
}

} // namespace gknn
