#include "gknn/training.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gknn {

TrainingSet::TrainingSet(std::vector<TrainingRecord> records)
    : records_(std::move(records)) {
    if (records_.empty()) {
        throw std::invalid_argument("training set must contain at least one record");
    }
    dim_ = records_[0].predictor.size();
    if (dim_ == 0) {
        throw std::invalid_argument("predictor dimension must be >= 1");
    }
    for (std::size_t i = 0; i < records_.size(); ++i) {
        const TrainingRecord& r = records_[i];
        if (r.predictor.size() != dim_) {
            throw std::invalid_argument("training record " + std::to_string(i) +
                                        ": predictor dimension mismatch");
        }
        for (double c : r.predictor) {
            if (!std::isfinite(c)) {
                throw std::invalid_argument("training record " + std::to_string(i) +
                                            ": non-finite predictor component");
            }
        }
        if (!std::isfinite(r.yield) || r.yield < 0.0) {
            throw std::invalid_argument("training record " + std::to_string(i) +
                                        ": yield must be finite and >= 0");
        }
    }

    const double n = static_cast<double>(records_.size());
    col_mean_.assign(dim_, 0.0);
    col_sd_.assign(dim_, 0.0);
    for (const TrainingRecord& r : records_) {
        for (std::size_t p = 0; p < dim_; ++p) {
            col_mean_[p] += r.predictor[p];
        }
    }
    for (std::size_t p = 0; p < dim_; ++p) {
        col_mean_[p] /= n;
    }
    for (const TrainingRecord& r : records_) {
        for (std::size_t p = 0; p < dim_; ++p) {
            const double d = r.predictor[p] - col_mean_[p];
            col_sd_[p] += d * d;
        }
    }
    for (std::size_t p = 0; p < dim_; ++p) {
        col_sd_[p] = std::sqrt(col_sd_[p] / n);
    }

    max_yield_ = 0.0;
    for (const TrainingRecord& r : records_) {
        if (r.yield > max_yield_) max_yield_ = r.yield;
    }
}

} // namespace gknn
