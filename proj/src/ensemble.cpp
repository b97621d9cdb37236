#include "gknn/ensemble.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gknn/digest.hpp"
#include "gknn/simulate.hpp"

namespace gknn {

namespace {

double safe_sqrt(double x) { return x > 0.0 ? std::sqrt(x) : 0.0; }

// z with a zero-SE convention: an exact match scores 0, any deviation from a
// zero-variance quantity is infinitely surprising.
double z_score(double diff, double se) {
    if (se > 0.0) return diff / se;
    return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

} // namespace

EnsembleResult run_ensemble(const std::vector<std::vector<double>>& series,
                            const TrainingSet& ts, const MetricSpec& metric,
                            const RankDistribution& rd, std::uint64_t seed,
                            std::size_t runs, const std::vector<double>* actual,
                            Exec exec) {
    if (runs < 2) {
        throw std::invalid_argument("ensemble needs at least 2 runs");
    }
    if (actual && actual->size() != series.size()) {
        throw std::invalid_argument("series and actual-yield lengths differ");
    }
    const auto rankings = rank_series(series, ts, metric, exec);
    const std::size_t T = series.size();
    const std::size_t R = runs;

    // Every (run, t) cell is a pure function of the master seed, so the fill
    // order is irrelevant; all reductions below run in fixed index order.
    std::vector<double> y(R * T);
    std::vector<double> annual(T % 12 == 0 ? R : 0);
    const double years = static_cast<double>(T) / 12.0;

    const auto fill_run = [&](std::size_t r) {
        const SeededSampler sampler{seed, static_cast<std::uint64_t>(r + 1)};
        const std::vector<double> yr = simulate_from_rankings(rankings, ts, rd, sampler);
        double sum = 0.0;
        for (std::size_t t = 0; t < T; ++t) {
            y[r * T + t] = yr[t];
            sum += yr[t];
        }
        if (!annual.empty()) annual[r] = sum / years;
    };

    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (long long r = 0; r < static_cast<long long>(R); ++r) {
            fill_run(static_cast<std::size_t>(r));
        }
    } else {
        for (std::size_t r = 0; r < R; ++r) fill_run(r);
    }

    EnsembleResult e;
    e.runs = R;
    e.per_t_mean.resize(T);
    e.per_t_var.resize(T);
    e.per_t_se.resize(T);
    e.per_t_m4.resize(T);
    if (actual) {
        e.per_t_sq_err_mean.resize(T);
        e.per_t_sq_err_se.resize(T);
    }

    const auto reduce_column = [&](std::size_t t) {
        double sum = 0.0;
        for (std::size_t r = 0; r < R; ++r) sum += y[r * T + t];
        const double mean = sum / static_cast<double>(R);
        double m2 = 0.0;
        double m4 = 0.0;
        for (std::size_t r = 0; r < R; ++r) {
            const double d = y[r * T + t] - mean;
            const double d2 = d * d;
            m2 += d2;
            m4 += d2 * d2;
        }
        e.per_t_mean[t] = mean;
        e.per_t_var[t] = m2 / static_cast<double>(R - 1);
        e.per_t_m4[t] = m4 / static_cast<double>(R);
        e.per_t_se[t] = safe_sqrt(e.per_t_var[t] / static_cast<double>(R));
        if (actual) {
            const double z = (*actual)[t];
            double es = 0.0;
            for (std::size_t r = 0; r < R; ++r) {
                const double d = y[r * T + t] - z;
                es += d * d;
            }
            const double emean = es / static_cast<double>(R);
            double ev = 0.0;
            for (std::size_t r = 0; r < R; ++r) {
                const double d = y[r * T + t] - z;
                const double dd = d * d - emean;
                ev += dd * dd;
            }
            e.per_t_sq_err_mean[t] = emean;
            e.per_t_sq_err_se[t] =
                safe_sqrt(ev / static_cast<double>(R - 1) / static_cast<double>(R));
        }
    };

    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (long long t = 0; t < static_cast<long long>(T); ++t) {
            reduce_column(static_cast<std::size_t>(t));
        }
    } else {
        for (std::size_t t = 0; t < T; ++t) reduce_column(t);
    }

    if (!annual.empty()) {
        double sum = 0.0;
        for (double v : annual) sum += v;
        e.annual_mean = sum / static_cast<double>(R);
        double m2 = 0.0;
        double m4 = 0.0;
        for (double v : annual) {
            const double d = v - e.annual_mean;
            const double d2 = d * d;
            m2 += d2;
            m4 += d2 * d2;
        }
        e.annual_var = m2 / static_cast<double>(R - 1);
        e.annual_m4 = m4 / static_cast<double>(R);
        e.annual_se = safe_sqrt(e.annual_var / static_cast<double>(R));
    } else {
        e.annual_mean = e.annual_var = e.annual_se = e.annual_m4 =
            std::numeric_limits<double>::quiet_NaN();
    }

    e.provenance = problem_digest(series, ts, metric, rd);
    return e;
}

ComparisonTable compare_to_analytic(const EnsembleResult& ensemble,
                                    const MomentReport& analytic, double z_threshold) {
    if (ensemble.provenance != analytic.provenance) {
        throw std::invalid_argument("ensemble and analytic report were built from "
                                    "different inputs");
    }
    if (ensemble.per_t_mean.size() != analytic.months.size()) {
        throw std::invalid_argument("ensemble and analytic report lengths differ");
    }

    ComparisonTable table;
    table.threshold = z_threshold;

    const auto add_row = [&](std::string quantity, std::size_t t, double a,
                             double emp, double se) {
        ComparisonRow row;
        row.quantity = std::move(quantity);
        row.t = t;
        row.analytic = a;
        row.empirical = emp;
        row.se = se;
        row.z = z_score(emp - a, se);
        row.flagged = !(std::fabs(row.z) <= z_threshold);
        table.any_flagged = table.any_flagged || row.flagged;
        table.rows.push_back(std::move(row));
    };

    const std::size_t R = ensemble.runs;
    for (std::size_t t = 0; t < analytic.months.size(); ++t) {
        const MonthMoments& mm = analytic.months[t];
        add_row("mean", t + 1, mm.expected_yield, ensemble.per_t_mean[t],
                ensemble.per_t_se[t]);
        const double var_se = safe_sqrt(
            (ensemble.per_t_m4[t] - ensemble.per_t_var[t] * ensemble.per_t_var[t]) /
            static_cast<double>(R));
        add_row("variance", t + 1, mm.variance, ensemble.per_t_var[t], var_se);
        if (mm.expected_error && t < ensemble.per_t_sq_err_mean.size()) {
            add_row("expected_error", t + 1, *mm.expected_error,
                    ensemble.per_t_sq_err_mean[t], ensemble.per_t_sq_err_se[t]);
        }
    }
    if (std::isfinite(ensemble.annual_mean)) {
        add_row("annual_mean", 0, analytic.annual.expected_annual_yield,
                ensemble.annual_mean, ensemble.annual_se);
        const double annual_var_se = safe_sqrt(
            (ensemble.annual_m4 - ensemble.annual_var * ensemble.annual_var) /
            static_cast<double>(R));
        add_row("annual_variance", 0, analytic.annual.annual_variance,
                ensemble.annual_var, annual_var_se);
    }
    return table;
}

} // namespace gknn
