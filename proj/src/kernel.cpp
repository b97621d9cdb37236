#include "gknn/kernel.hpp"

#include <cmath>
#include <exception>
#include <stdexcept>

#include "gknn/ranking.hpp"

namespace gknn {

DiscreteKernel::DiscreteKernel(TrainingSet ts, MetricSpec metric, RankDistribution rd)
    : ts_(std::move(ts)), metric_(std::move(metric)), rd_(std::move(rd)) {
    if (rd_.size() != ts_.size()) {
        throw std::invalid_argument("rank distribution size must equal the training "
                                    "set size");
    }
}

double DiscreteKernel::mass(const std::vector<double>& v, double a, double b) const {
    if (!(a < b)) {
        throw std::invalid_argument("interval must satisfy a < b");
    }
    const NeighborRanking r = rank_neighbors(v, ts_, metric_);
    if (rd_.support_size() > r.order.size()) {
        throw std::invalid_argument("distribution support exceeds the candidate count");
    }
    double mass = 0.0;
    for (std::size_t i = 0; i < rd_.support_size(); ++i) {
        const double u = ts_.yield(r.order[i]);
        if (u > a && u < b) { // open interval
            mass += rd_.probability(i);
        }
    }
    return mass;
}

double eval_discrete_kernel(const DiscreteKernel& kernel, const std::vector<double>& v,
                            double a, double b) {
    return kernel.mass(v, a, b);
}

double SyntheticProcess::cdf(double v, double y) const {
    if (y <= 0.0) return 0.0;
    return 1.0 - std::exp(-y / (1.0 + v));
}

double SyntheticProcess::quantile(double v, double rho) const {
    return -(1.0 + v) * std::log1p(-rho);
}

SyntheticSeries generate_synthetic_series(const SyntheticProcess& process,
                                          std::size_t length, std::uint64_t seed) {
    if (length < 1) {
        throw std::invalid_argument("synthetic series length must be >= 1");
    }
    const SeededSampler sampler{seed, 0};
    SyntheticSeries s;
    s.predictors.reserve(length);
    s.yields.reserve(length);
    for (std::size_t t = 1; t <= length; ++t) {
        const double v = sampler.uniform(t, 0);
        const double rho = sampler.uniform(t, 1);
        s.predictors.push_back({v});
        s.yields.push_back(process.quantile(v, rho));
    }
    return s;
}

EvalGrid EvalGrid::standard() {
    EvalGrid g;
    g.v_points = {0.1, 0.3, 0.5, 0.7, 0.9};
    const std::vector<double> ends = {0.0, 0.5, 1.0, 2.0, 4.0};
    for (std::size_t i = 0; i < ends.size(); ++i) {
        for (std::size_t j = i + 1; j < ends.size(); ++j) {
            g.intervals.emplace_back(ends[i], ends[j]);
        }
    }
    return g;
}

namespace {

void validate_experiment_inputs(const std::vector<std::size_t>& n_values,
                                const std::vector<std::uint64_t>& seeds,
                                const EvalGrid& grid) {
    if (n_values.empty() || seeds.empty()) {
        throw std::invalid_argument("need at least one N value and one seed");
    }
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        if (n_values[i] < 1) {
            throw std::invalid_argument("N values must be >= 1");
        }
        if (i > 0 && n_values[i] <= n_values[i - 1]) {
            throw std::invalid_argument("N values must be strictly increasing");
        }
    }
    if (grid.v_points.empty() || grid.intervals.empty()) {
        throw std::invalid_argument("evaluation grid must not be empty");
    }
    for (const auto& [a, b] : grid.intervals) {
        if (!(a < b)) {
            throw std::invalid_argument("grid interval must satisfy a < b");
        }
    }
}

struct CellErrors {
    double sup = 0.0;
    double mean = 0.0;
};

CellErrors grid_errors(const SyntheticProcess& process, const SyntheticSeries& syn,
                       std::size_t n, const EvalGrid& grid) {
    std::vector<TrainingRecord> recs(n);
    for (std::size_t i = 0; i < n; ++i) {
        recs[i] = {syn.predictors[i], syn.yields[i]};
    }
    const std::size_t k =
        static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(n))));
    const DiscreteKernel kernel(TrainingSet(std::move(recs)),
                                MetricSpec::component_abs_diff(0),
                                RankDistribution::top_k_uniform(k, n));
    CellErrors ce;
    std::size_t cells = 0;
    for (double v : grid.v_points) {
        for (const auto& [a, b] : grid.intervals) {
            const double approx = kernel.mass({v}, a, b);
            const double exact = process.cdf(v, b) - process.cdf(v, a);
            const double err = std::fabs(approx - exact);
            if (err > ce.sup) ce.sup = err;
            ce.mean += err;
            ++cells;
        }
    }
    ce.mean /= static_cast<double>(cells);
    return ce;
}

} // namespace

std::vector<KernelErrorRow> convergence_experiment(const SyntheticProcess& process,
                                                   const std::vector<std::size_t>& n_values,
                                                   const std::vector<std::uint64_t>& seeds,
                                                   const EvalGrid& grid, Exec exec) {
    validate_experiment_inputs(n_values, seeds, grid);
    const std::size_t max_n = n_values.back();

    // cells[s][n]; one synthetic sequence per seed, prefixes reused across N
    std::vector<std::vector<CellErrors>> cells(seeds.size(),
                                               std::vector<CellErrors>(n_values.size()));

    const auto run_seed = [&](std::size_t si) {
        const SyntheticSeries syn = generate_synthetic_series(process, max_n, seeds[si]);
        for (std::size_t ni = 0; ni < n_values.size(); ++ni) {
            cells[si][ni] = grid_errors(process, syn, n_values[ni], grid);
        }
    };

    if (exec == Exec::parallel) {
        std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
        for (long long si = 0; si < static_cast<long long>(seeds.size()); ++si) {
            if (error) continue;
            try {
                run_seed(static_cast<std::size_t>(si));
            } catch (...) {
#pragma omp critical
                if (!error) error = std::current_exception();
            }
        }
        if (error) std::rethrow_exception(error);
    } else {
        for (std::size_t si = 0; si < seeds.size(); ++si) run_seed(si);
    }

    std::vector<KernelErrorRow> rows;
    rows.reserve(seeds.size() * n_values.size());
    for (std::size_t ni = 0; ni < n_values.size(); ++ni) {
        for (std::size_t si = 0; si < seeds.size(); ++si) {
            KernelErrorRow row;
            row.n = n_values[ni];
            row.k_n = static_cast<std::size_t>(
                std::floor(std::sqrt(static_cast<double>(n_values[ni]))));
            row.seed = seeds[si];
            row.sup_error = cells[si][ni].sup;
            row.mean_error = cells[si][ni].mean;
            rows.push_back(row);
        }
    }
    return rows;
}

} // namespace gknn
