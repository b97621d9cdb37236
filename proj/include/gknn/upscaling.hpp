#pragma once

#include <cstdint>
#include <vector>

#include "gknn/metric.hpp"
#include "gknn/rank_distribution.hpp"
#include "gknn/training.hpp"

namespace gknn {

// Column layout of the monthly record formats. The climate vector holds, in
// order:
//   coombes:   avg_temp_c, rain_days, rain_depth_mm
//   knn:       rain_depth_mm
//   bootstrap: rain_depth_mm (no month label in the file format)
enum class Schema { coombes, knn, bootstrap };

std::size_t schema_climate_columns(Schema schema);
std::size_t schema_rain_column(Schema schema); // index within the climate vector
const char* schema_name(Schema schema);

struct MonthlyRecord {
    int month_label = 0; // 1..12; 0 means absent (bootstrap file format)
    std::vector<double> climate;
    double yield = 0.0;
};

struct MonthlyQuery {
    int month_label = 0;
    std::vector<double> climate;
};

// Predictor layout: [month_label, climate...] for coombes/knn, [climate...]
// for bootstrap.
TrainingSet to_training_set(const std::vector<MonthlyRecord>& records, Schema schema);
std::vector<std::vector<double>> to_query_series(const std::vector<MonthlyQuery>& queries,
                                                 Schema schema);

// Consecutive groups of 50 samples in rainfall-sorted order (ties broken by
// index; the last band keeps any remainder). Queries map to the band whose
// half-open rainfall cell contains them, with midpoints between adjacent
// bands' extreme samples as the cell boundaries; values outside the training
// range clamp to the end bands.
class BandIndex {
public:
    explicit BandIndex(const std::vector<double>& rainfall, std::size_t band_size = 50);

    std::size_t band_count() const noexcept { return bands_.size(); }
    std::size_t band_of(double rainfall) const;
    const std::vector<std::uint32_t>& band_members(std::size_t band) const;
    // [lowest sample, highest sample] within the band.
    std::pair<double, double> band_range(std::size_t band) const;

private:
    std::vector<std::vector<std::uint32_t>> bands_;
    std::vector<double> boundaries_;
    std::vector<std::pair<double, double>> ranges_;
};

// Deterministic nearest neighbor over equal-month records with a weighted
// Manhattan metric on the non-label components (default weights 1). Consumes
// no randomness.
std::vector<double> upscale_nn(const std::vector<MonthlyQuery>& queries,
                               const std::vector<MonthlyRecord>& training,
                               const std::vector<double>& weights = {1.0, 1.0, 1.0});

// Stochastic k-nearest-neighbor resampling: std-normalized Euclidean metric
// over (month_label, rain_depth) and harmonic rank probabilities.
std::vector<double> upscale_knn(const std::vector<MonthlyQuery>& queries,
                                const std::vector<MonthlyRecord>& training,
                                std::size_t k, std::uint64_t seed,
                                std::uint64_t run_index = 1);

// Fixed rainfall bands of 50 samples; a uniform draw within the query's band.
std::vector<double> upscale_bootstrap(const std::vector<MonthlyQuery>& queries,
                                      const std::vector<MonthlyRecord>& training,
                                      std::uint64_t seed, std::uint64_t run_index = 1);

// The 50 rainfall-nearest records instead of predefined bands, drawn
// uniformly.
std::vector<double> upscale_modified_bootstrap(const std::vector<MonthlyQuery>& queries,
                                               const std::vector<MonthlyRecord>& training,
                                               std::uint64_t seed,
                                               std::uint64_t run_index = 1);

} // namespace gknn
