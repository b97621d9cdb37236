#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gknn/analytics.hpp"
#include "gknn/class_distribution.hpp"
#include "gknn/ensemble.hpp"
#include "gknn/kernel.hpp"
#include "gknn/tank.hpp"
#include "gknn/upscaling.hpp"

namespace gknn {

// All CSV output uses '.' decimals, comma delimiters, a header row, LF line
// endings, ISO-8601 dates and 12-significant-digit floats.
std::string format_double(double x);

// Writes content to a temp file in the same directory, then renames over the
// target.
void atomic_write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

// --- readers (errors report path and 1-based line number) ---

// Header: date,rain_mm,temp_c
std::vector<DailyClimateRecord> read_daily_climate_csv(const std::string& path);

// Schema inferred from the header:
//   coombes:   month_label,avg_temp_c,rain_days,rain_depth_mm,yield_l
//   knn:       month_label,rain_depth_mm,yield_l
//   bootstrap: rain_depth_mm,yield_l
std::vector<MonthlyRecord> read_monthly_training_csv(const std::string& path,
                                                     Schema& schema_out);
// Same headers minus yield_l.
std::vector<MonthlyQuery> read_query_series_csv(const std::string& path,
                                                Schema& schema_out);
// Either a bare yield_l column or a monthly training file whose yields are
// taken.
std::vector<double> read_actual_yields_csv(const std::string& path);

// --- writers ---

void write_daily_yield_csv(const std::string& path,
                           const std::vector<DailyClimateRecord>& climate,
                           const std::vector<DailyTankState>& states);
void write_monthly_training_csv(const std::string& path,
                                const std::vector<MonthlyRecord>& records,
                                Schema schema);
// Columns run,t,month_label,yield_l; run and t are 1-based.
void write_upscale_csv(const std::string& path,
                       const std::vector<std::vector<double>>& runs_yields,
                       const std::vector<int>& month_labels);
void write_moments_csv(const std::string& path, const MomentReport& report);
std::string annual_summary_text(const AnnualMoments& annual);
void write_comparison_csv(const std::string& path, const ComparisonTable& table);
void write_nu_csv(const std::string& path, const EmpiricalDistribution& nu);
void write_kernel_error_csv(const std::string& path,
                            const std::vector<KernelErrorRow>& rows);

} // namespace gknn
