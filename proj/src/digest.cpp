#include "gknn/digest.hpp"

#include <bit>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace gknn {

std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t h) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace {

std::uint64_t fold_u64(std::uint64_t h, std::uint64_t v) {
    return fnv1a64(&v, sizeof v, h);
}

std::uint64_t fold_double(std::uint64_t h, double x) {
    return fold_u64(h, std::bit_cast<std::uint64_t>(x));
}

std::uint64_t fold_doubles(std::uint64_t h, const std::vector<double>& xs) {
    h = fold_u64(h, xs.size());
    for (double x : xs) h = fold_double(h, x);
    return h;
}

} // namespace

std::uint64_t fnv1a64_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open file for digest: " + path);
    }
    std::uint64_t h = kFnvOffset;
    char buf[1 << 16];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        h = fnv1a64(buf, static_cast<std::size_t>(in.gcount()), h);
    }
    return h;
}

std::string digest_hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::uint64_t digest_training(const TrainingSet& ts) {
    std::uint64_t h = kFnvOffset;
    h = fold_u64(h, ts.size());
    h = fold_u64(h, ts.dimension());
    for (const TrainingRecord& r : ts.records()) {
        h = fold_doubles(h, r.predictor);
        h = fold_double(h, r.yield);
    }
    return h;
}

std::uint64_t digest_metric(const MetricSpec& metric) {
    std::uint64_t h = kFnvOffset;
    h = fold_u64(h, static_cast<std::uint64_t>(metric.kind));
    h = fold_doubles(h, metric.weights);
    h = fold_u64(h, metric.component);
    h = fold_u64(h, metric.month_filter ? 1 : 0);
    return h;
}

std::uint64_t digest_distribution(const RankDistribution& rd) {
    return fold_doubles(kFnvOffset, rd.probabilities());
}

std::uint64_t digest_series(const std::vector<std::vector<double>>& series) {
    std::uint64_t h = kFnvOffset;
    h = fold_u64(h, series.size());
    for (const auto& v : series) h = fold_doubles(h, v);
    return h;
}

std::uint64_t model_digest(const TrainingSet& ts, const MetricSpec& metric,
                           const RankDistribution& rd) {
    std::uint64_t h = kFnvOffset;
    h = fold_u64(h, digest_training(ts));
    h = fold_u64(h, digest_metric(metric));
    h = fold_u64(h, digest_distribution(rd));
    return h;
}

std::uint64_t problem_digest(const std::vector<std::vector<double>>& series,
                             const TrainingSet& ts, const MetricSpec& metric,
                             const RankDistribution& rd) {
    std::uint64_t h = model_digest(ts, metric, rd);
    h = fold_u64(h, digest_series(series));
    return h;
}

} // namespace gknn
