#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gknn/sampler.hpp"

namespace gknn {

// Probability distribution over neighbor ranks (not over record identities).
// Ranks are 0-based in code: probability(0) is the nearest neighbor's weight.
class RankDistribution {
public:
    // p_i = 1/k for the first k ranks, 0 beyond.
    static RankDistribution top_k_uniform(std::size_t k, std::size_t n);
    // p_i proportional to 1/(i+1) for the first k ranks, normalized.
    static RankDistribution harmonic(std::size_t k, std::size_t n);
    // Arbitrary probability vector; must be non-negative and sum to 1
    // within 1e-12.
    static RankDistribution explicit_probs(std::vector<double> probs);

    const std::vector<double>& probabilities() const noexcept { return p_; }
    double probability(std::size_t rank) const { return p_[rank]; }
    std::size_t size() const noexcept { return p_.size(); }
    // Number of ranks up to and including the last one with p > 0.
    std::size_t support_size() const noexcept { return support_; }
    const std::vector<double>& cumulative() const noexcept { return cum_; }

private:
    explicit RankDistribution(std::vector<double> p);

    std::vector<double> p_;
    std::vector<double> cum_;
    std::size_t support_ = 0;
};

// Inverse-CDF selection: smallest rank whose cumulative probability strictly
// exceeds u. Clamped to the last supported rank if accumulated rounding left
// the final cumulative below u.
std::size_t rank_from_uniform(const RankDistribution& rd, double u);

// Draws the single variate keyed by (seed, run_index, t) and selects a rank.
std::size_t sample_rank(const RankDistribution& rd, const SeededSampler& sampler,
                        std::uint64_t t);

} // namespace gknn
