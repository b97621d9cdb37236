#include "gknn/upscaling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gknn/ranking.hpp"
#include "gknn/simulate.hpp"

namespace gknn {

std::size_t schema_climate_columns(Schema schema) {
    switch (schema) {
    case Schema::coombes: return 3;
    case Schema::knn: return 1;
    case Schema::bootstrap: return 1;
    }
    throw std::logic_error("unknown schema");
}

std::size_t schema_rain_column(Schema schema) {
    return schema == Schema::coombes ? 2 : 0;
}

const char* schema_name(Schema schema) {
    switch (schema) {
    case Schema::coombes: return "coombes";
    case Schema::knn: return "knn";
    case Schema::bootstrap: return "bootstrap";
    }
    throw std::logic_error("unknown schema");
}

namespace {

// bootstrap-format files carry no month label; 0 marks it absent
void check_month_label(int label, Schema schema, std::size_t row) {
    const bool ok = schema == Schema::bootstrap ? (label >= 0 && label <= 12)
                                                : (label >= 1 && label <= 12);
    if (!ok) {
        throw std::invalid_argument("row " + std::to_string(row) +
                                    ": month label must be in 1..12");
    }
}

std::vector<double> predictor_of(int month_label, const std::vector<double>& climate,
                                 Schema schema) {
    std::vector<double> v;
    if (schema != Schema::bootstrap) {
        v.reserve(climate.size() + 1);
        v.push_back(static_cast<double>(month_label));
    } else {
        v.reserve(climate.size());
    }
    v.insert(v.end(), climate.begin(), climate.end());
    return v;
}

} // namespace

TrainingSet to_training_set(const std::vector<MonthlyRecord>& records, Schema schema) {
    std::vector<TrainingRecord> out;
    out.reserve(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        const MonthlyRecord& r = records[i];
        check_month_label(r.month_label, schema, i);
        if (r.climate.size() != schema_climate_columns(schema)) {
            throw std::invalid_argument("row " + std::to_string(i) +
                                        ": climate column count does not match schema " +
                                        schema_name(schema));
        }
        out.push_back({predictor_of(r.month_label, r.climate, schema), r.yield});
    }
    return TrainingSet(std::move(out));
}

std::vector<std::vector<double>> to_query_series(const std::vector<MonthlyQuery>& queries,
                                                 Schema schema) {
    std::vector<std::vector<double>> out;
    out.reserve(queries.size());
    for (std::size_t i = 0; i < queries.size(); ++i) {
        const MonthlyQuery& q = queries[i];
        check_month_label(q.month_label, schema, i);
        if (q.climate.size() != schema_climate_columns(schema)) {
            throw std::invalid_argument("row " + std::to_string(i) +
                                        ": climate column count does not match schema " +
                                        schema_name(schema));
        }
        out.push_back(predictor_of(q.month_label, q.climate, schema));
    }
    return out;
}

BandIndex::BandIndex(const std::vector<double>& rainfall, std::size_t band_size) {
    if (band_size < 1) {
        throw std::invalid_argument("band size must be >= 1");
    }
    if (rainfall.size() < band_size) {
        throw std::invalid_argument("need at least " + std::to_string(band_size) +
                                    " training records, got " +
                                    std::to_string(rainfall.size()));
    }
    std::vector<std::uint32_t> order(rainfall.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (rainfall[a] != rainfall[b]) return rainfall[a] < rainfall[b];
        return a < b;
    });

    for (std::size_t start = 0; start < order.size(); start += band_size) {
        const std::size_t end = std::min(start + band_size, order.size());
        bands_.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(start),
                            order.begin() + static_cast<std::ptrdiff_t>(end));
        ranges_.emplace_back(rainfall[order[start]], rainfall[order[end - 1]]);
    }
    for (std::size_t b = 0; b + 1 < bands_.size(); ++b) {
        boundaries_.push_back(0.5 * (ranges_[b].second + ranges_[b + 1].first));
    }
}

std::size_t BandIndex::band_of(double rainfall) const {
    // half-open cells [b_{i-1}, b_i); out-of-range values clamp to end bands
    const auto it = std::upper_bound(boundaries_.begin(), boundaries_.end(), rainfall);
    return static_cast<std::size_t>(it - boundaries_.begin());
}

const std::vector<std::uint32_t>& BandIndex::band_members(std::size_t band) const {
    return bands_.at(band);
}

std::pair<double, double> BandIndex::band_range(std::size_t band) const {
    return ranges_.at(band);
}

std::vector<double> upscale_nn(const std::vector<MonthlyQuery>& queries,
                               const std::vector<MonthlyRecord>& training,
                               const std::vector<double>& weights) {
    const TrainingSet ts = to_training_set(training, Schema::coombes);
    const MetricSpec metric = MetricSpec::weighted_manhattan(weights, true);
    const auto series = to_query_series(queries, Schema::coombes);
    std::vector<double> y(series.size());
    for (std::size_t t = 0; t < series.size(); ++t) {
        y[t] = ts.yield(rank_neighbors(series[t], ts, metric).order[0]);
    }
    return y;
}

std::vector<double> upscale_knn(const std::vector<MonthlyQuery>& queries,
                                const std::vector<MonthlyRecord>& training,
                                std::size_t k, std::uint64_t seed,
                                std::uint64_t run_index) {
    const TrainingSet ts = to_training_set(training, Schema::knn);
    const RankDistribution rd = RankDistribution::harmonic(k, ts.size());
    return gknn_simulate(to_query_series(queries, Schema::knn), ts,
                         MetricSpec::std_normalized_euclidean(), rd,
                         SeededSampler{seed, run_index});
}

std::vector<double> upscale_bootstrap(const std::vector<MonthlyQuery>& queries,
                                      const std::vector<MonthlyRecord>& training,
                                      std::uint64_t seed, std::uint64_t run_index) {
    const std::size_t rain_col = schema_rain_column(Schema::bootstrap);
    std::vector<double> rainfall(training.size());
    for (std::size_t i = 0; i < training.size(); ++i) {
        if (training[i].climate.size() != schema_climate_columns(Schema::bootstrap)) {
            throw std::invalid_argument("row " + std::to_string(i) +
                                        ": climate column count does not match schema "
                                        "bootstrap");
        }
        rainfall[i] = training[i].climate[rain_col];
    }
    const BandIndex bands(rainfall);

    const SeededSampler sampler{seed, run_index};
    std::vector<double> y(queries.size());
    for (std::size_t t = 0; t < queries.size(); ++t) {
        if (queries[t].climate.size() != schema_climate_columns(Schema::bootstrap)) {
            throw std::invalid_argument("query row " + std::to_string(t) +
                                        ": climate column count does not match schema "
                                        "bootstrap");
        }
        const auto& members = bands.band_members(bands.band_of(queries[t].climate[rain_col]));
        const double u = sampler.uniform(static_cast<std::uint64_t>(t + 1));
        const std::size_t pick = std::min(
            members.size() - 1,
            static_cast<std::size_t>(u * static_cast<double>(members.size())));
        y[t] = training[members[pick]].yield;
    }
    return y;
}

std::vector<double> upscale_modified_bootstrap(const std::vector<MonthlyQuery>& queries,
                                               const std::vector<MonthlyRecord>& training,
                                               std::uint64_t seed,
                                               std::uint64_t run_index) {
    if (training.size() < 50) {
        throw std::invalid_argument("need at least 50 training records, got " +
                                    std::to_string(training.size()));
    }
    const TrainingSet ts = to_training_set(training, Schema::bootstrap);
    const RankDistribution rd = RankDistribution::top_k_uniform(50, ts.size());
    return gknn_simulate(to_query_series(queries, Schema::bootstrap), ts,
                         MetricSpec::component_abs_diff(schema_rain_column(Schema::bootstrap)),
                         rd, SeededSampler{seed, run_index});
}

} // namespace gknn
