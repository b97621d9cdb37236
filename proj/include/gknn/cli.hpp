#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gknn/rank_distribution.hpp"
#include "gknn/upscaling.hpp"

namespace gknn::cli {

// Exit codes: 0 success, 1 input error, 2 verification failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitVerifyFailure = 2;

// Rank-distribution spec grammar: "topk:K", "harmonic:K",
// "explicit:p1,p2,...".
RankDistribution parse_dist_spec(const std::string& spec, std::size_t n);
Schema parse_schema(const std::string& name);
// Metric names: "manhattan", "euclidean", "rain-abs"; empty selects the
// schema default (coombes -> manhattan, knn -> euclidean,
// bootstrap -> rain-abs).
MetricSpec metric_for(const std::string& name, Schema schema);

struct TankSimOptions {
    std::string climate_path;
    std::string config_path; // optional; defaults apply when empty
    std::string out_path;    // monthly training CSV
    std::string daily_out_path; // defaults to <out>.daily.csv
    std::string schema = "coombes";
};
int run_tank_sim(const TankSimOptions& opt);

struct UpscaleOptions {
    std::string method; // nn | knn | bootstrap | modified-bootstrap
    std::string training_path;
    std::string series_path;
    std::size_t k = 3;
    std::uint64_t seed = 0;
    std::size_t runs = 1;
    std::string out_path;
};
int run_upscale(const UpscaleOptions& opt);

struct MomentsOptions {
    std::string training_path;
    std::string series_path;
    std::string dist_spec;
    std::string actual_path; // optional
    std::string metric;      // optional override
    std::string out_path;    // per-step CSV
    std::string summary_path; // defaults to <out>.summary.txt
};
int run_moments(const MomentsOptions& opt);

struct VerifyOptions {
    std::string training_path;
    std::string series_path;
    std::string dist_spec;
    std::string metric; // optional override
    std::uint64_t seed = 0;
    std::size_t runs = 1000;
    double z_threshold = 4.0;
    std::string out_path;
};
int run_verify(const VerifyOptions& opt);

struct KernelExpOptions {
    std::vector<std::size_t> n_values;
    std::vector<std::uint64_t> seeds;
    std::string out_path;
};
int run_kernel_exp(const KernelExpOptions& opt);

struct NuOptions {
    std::string training_path;
    std::string series_path;
    std::string dist_spec;
    std::string metric; // optional override
    std::string out_path;
    std::string summary_path; // defaults to <out>.summary.txt
};
int run_nu(const NuOptions& opt);

} // namespace gknn::cli
