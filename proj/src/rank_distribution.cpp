#include "gknn/rank_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gknn {

RankDistribution::RankDistribution(std::vector<double> p) : p_(std::move(p)) {
    if (p_.empty()) {
        throw std::invalid_argument("rank distribution must not be empty");
    }
    double sum = 0.0;
    for (double x : p_) {
        if (!std::isfinite(x) || x < 0.0) {
            throw std::invalid_argument("rank probabilities must be finite and >= 0");
        }
        sum += x;
    }
    if (std::fabs(sum - 1.0) > 1e-12) {
        throw std::invalid_argument("rank probabilities must sum to 1 (got " +
                                    std::to_string(sum) + ")");
    }
    support_ = 0;
    for (std::size_t i = 0; i < p_.size(); ++i) {
        if (p_[i] > 0.0) support_ = i + 1;
    }
    cum_.resize(p_.size());
    double c = 0.0;
    for (std::size_t i = 0; i < p_.size(); ++i) {
        c += p_[i];
        cum_[i] = c;
    }
}

RankDistribution RankDistribution::top_k_uniform(std::size_t k, std::size_t n) {
    if (k < 1 || k > n) {
        throw std::invalid_argument("top_k_uniform: k must satisfy 1 <= k <= N");
    }
    std::vector<double> p(n, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
        p[i] = 1.0 / static_cast<double>(k);
    }
    return RankDistribution(std::move(p));
}

RankDistribution RankDistribution::harmonic(std::size_t k, std::size_t n) {
    if (k < 1 || k > n) {
        throw std::invalid_argument("harmonic: k must satisfy 1 <= k <= N");
    }
    double norm = 0.0;
    for (std::size_t i = 1; i <= k; ++i) {
        norm += 1.0 / static_cast<double>(i);
    }
    std::vector<double> p(n, 0.0);
    for (std::size_t i = 1; i <= k; ++i) {
        p[i - 1] = (1.0 / static_cast<double>(i)) / norm;
    }
    return RankDistribution(std::move(p));
}

RankDistribution RankDistribution::explicit_probs(std::vector<double> probs) {
    return RankDistribution(std::move(probs));
}

std::size_t rank_from_uniform(const RankDistribution& rd, double u) {
    const auto& cum = rd.cumulative();
    const std::size_t support = rd.support_size();
    const auto end = cum.begin() + static_cast<std::ptrdiff_t>(support);
    const auto it = std::upper_bound(cum.begin(), end, u);
    if (it == end) {
        return support - 1; // rounding left the last cumulative below u
    }
    return static_cast<std::size_t>(it - cum.begin());
}

std::size_t sample_rank(const RankDistribution& rd, const SeededSampler& sampler,
                        std::uint64_t t) {
    return rank_from_uniform(rd, sampler.uniform(t));
}

} // namespace gknn
