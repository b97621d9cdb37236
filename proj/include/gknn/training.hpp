#pragma once

#include <cstddef>
#include <vector>

namespace gknn {

// A predictor vector paired with its observed yield (the dependent variable,
// always >= 0, e.g. liters/month for a rainwater tank).
struct TrainingRecord {
    std::vector<double> predictor;
    double yield = 0.0;
};

// Immutable training table. Column means and standard deviations are
// precomputed over the full record list for the normalized metric.
// Safe to share across threads after construction.
class TrainingSet {
public:
    explicit TrainingSet(std::vector<TrainingRecord> records);

    std::size_t size() const noexcept { return records_.size(); }
    std::size_t dimension() const noexcept { return dim_; }
    const TrainingRecord& record(std::size_t i) const { return records_[i]; }
    const std::vector<TrainingRecord>& records() const noexcept { return records_; }
    double yield(std::size_t i) const { return records_[i].yield; }

    const std::vector<double>& column_means() const noexcept { return col_mean_; }
    // Population standard deviation (divide by N) per predictor column.
    const std::vector<double>& column_stddevs() const noexcept { return col_sd_; }
    double max_yield() const noexcept { return max_yield_; }

private:
    std::vector<TrainingRecord> records_;
    std::size_t dim_ = 0;
    std::vector<double> col_mean_;
    std::vector<double> col_sd_;
    double max_yield_ = 0.0;
};

} // namespace gknn
