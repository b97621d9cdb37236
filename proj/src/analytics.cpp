#include "gknn/analytics.hpp"

#include <cmath>
#include <exception>
#include <map>
#include <stdexcept>
#include <string>

#include "gknn/digest.hpp"

namespace gknn {

namespace {

void check_support(const NeighborRanking& ranking, const RankDistribution& rd) {
    if (rd.support_size() > ranking.order.size()) {
        throw std::invalid_argument("distribution support exceeds the ranked "
                                    "candidate count");
    }
}

std::vector<std::uint32_t> class_key(const NeighborRanking& ranking,
                                     const RankDistribution& rd) {
    return {ranking.order.begin(),
            ranking.order.begin() + static_cast<std::ptrdiff_t>(rd.support_size())};
}

} // namespace

ClassMoments ranking_class_moments(const std::vector<std::uint32_t>& prefix,
                                   const TrainingSet& ts, const RankDistribution& rd) {
    ClassMoments cm;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        cm.mean += rd.probability(i) * ts.yield(prefix[i]);
    }
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        const double d = ts.yield(prefix[i]) - cm.mean;
        cm.variance += rd.probability(i) * d * d;
    }
    return cm;
}

double expected_month_yield(const NeighborRanking& ranking, const TrainingSet& ts,
                            const RankDistribution& rd) {
    check_support(ranking, rd);
    double mean = 0.0;
    for (std::size_t i = 0; i < rd.support_size(); ++i) {
        mean += rd.probability(i) * ts.yield(ranking.order[i]);
    }
    return mean;
}

double month_variance(const NeighborRanking& ranking, const TrainingSet& ts,
                      const RankDistribution& rd) {
    check_support(ranking, rd);
    const double mean = expected_month_yield(ranking, ts, rd);
    double var = 0.0;
    for (std::size_t i = 0; i < rd.support_size(); ++i) {
        const double d = ts.yield(ranking.order[i]) - mean;
        var += rd.probability(i) * d * d;
    }
    return var;
}

MonthMoments expected_month_error(const NeighborRanking& ranking, const TrainingSet& ts,
                                  const RankDistribution& rd, double actual_yield,
                                  std::size_t t) {
    if (!std::isfinite(actual_yield) || actual_yield < 0.0) {
        throw std::invalid_argument("actual yield must be finite and >= 0");
    }
    MonthMoments mm;
    mm.t = t;
    mm.expected_yield = expected_month_yield(ranking, ts, rd);
    mm.variance = month_variance(ranking, ts, rd);
    const double bias = mm.expected_yield - actual_yield;
    mm.bias_sq = bias * bias;
    mm.expected_error = mm.variance + bias * bias;
    return mm;
}

double total_expected_error(const std::vector<std::vector<double>>& series,
                            const TrainingSet& ts, const MetricSpec& metric,
                            const RankDistribution& rd,
                            const std::vector<double>& actual, Exec exec) {
    if (series.size() != actual.size()) {
        throw std::invalid_argument("series and actual-yield lengths differ");
    }
    const auto rankings = rank_series(series, ts, metric, exec);
    double total = 0.0;
    for (std::size_t t = 0; t < rankings.size(); ++t) {
        total += *expected_month_error(rankings[t], ts, rd, actual[t], t + 1)
                      .expected_error;
    }
    return total;
}

double base_error_map(const std::vector<double>& v, const TrainingSet& ts,
                      const MetricSpec& metric, const RankDistribution& rd) {
    return month_variance(rank_neighbors(v, ts, metric), ts, rd);
}

AnnualMoments annual_moments_from_rankings(const std::vector<NeighborRanking>& rankings,
                                           const TrainingSet& ts,
                                           const RankDistribution& rd) {
    if (rankings.empty() || rankings.size() % 12 != 0) {
        throw std::invalid_argument("series length must be a positive multiple of 12");
    }
    const std::size_t m = rankings.size() / 12;

    std::map<std::vector<std::uint32_t>, std::size_t> counts;
    for (const NeighborRanking& r : rankings) {
        check_support(r, rd);
        ++counts[class_key(r, rd)];
    }

    double count_weighted_mean = 0.0;
    double count_weighted_var = 0.0;
    double class_var_sum = 0.0;
    for (const auto& [key, count] : counts) {
        const ClassMoments cm = ranking_class_moments(key, ts, rd);
        count_weighted_mean += static_cast<double>(count) * cm.mean;
        count_weighted_var += static_cast<double>(count) * cm.variance;
        class_var_sum += cm.variance;
    }

    const double years = static_cast<double>(m);
    AnnualMoments am;
    am.years = m;
    am.expected_annual_yield = count_weighted_mean / years;
    am.annual_variance = count_weighted_var / (years * years);
    am.variance_constant = 12.0 * class_var_sum;
    // exact inequality; 1e-12 relative slack absorbs the differing float paths
    am.bound_ok = am.annual_variance <=
                  (am.variance_constant / years) * (1.0 + 1e-12);
    am.total_yield_variance = years * years * am.annual_variance;
    return am;
}

AnnualMoments annual_moments(const std::vector<std::vector<double>>& series,
                             const TrainingSet& ts, const MetricSpec& metric,
                             const RankDistribution& rd, Exec exec) {
    if (series.empty() || series.size() % 12 != 0) {
        throw std::invalid_argument("series length must be a positive multiple of 12");
    }
    return annual_moments_from_rankings(rank_series(series, ts, metric, exec), ts, rd);
}

MomentReport moment_report(const std::vector<std::vector<double>>& series,
                           const TrainingSet& ts, const MetricSpec& metric,
                           const RankDistribution& rd,
                           const std::vector<double>* actual, Exec exec) {
    if (series.empty() || series.size() % 12 != 0) {
        throw std::invalid_argument("series length must be a positive multiple of 12");
    }
    if (actual && actual->size() != series.size()) {
        throw std::invalid_argument("series and actual-yield lengths differ");
    }
    const auto rankings = rank_series(series, ts, metric, exec);

    MomentReport report;
    report.months.resize(rankings.size());
    for (std::size_t t = 0; t < rankings.size(); ++t) {
        if (actual) {
            report.months[t] =
                expected_month_error(rankings[t], ts, rd, (*actual)[t], t + 1);
        } else {
            MonthMoments mm;
            mm.t = t + 1;
            mm.expected_yield = expected_month_yield(rankings[t], ts, rd);
            mm.variance = month_variance(rankings[t], ts, rd);
            report.months[t] = mm;
        }
    }
    report.annual = annual_moments_from_rankings(rankings, ts, rd);
    report.provenance = problem_digest(series, ts, metric, rd);
    return report;
}

} // namespace gknn
