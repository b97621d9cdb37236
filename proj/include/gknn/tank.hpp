#pragma once

#include <vector>

#include "gknn/date.hpp"
#include "gknn/upscaling.hpp"

namespace gknn {

// Simple daily water-balance tank model, yield-before-spill: demand is served
// from storage plus the day's inflow before overflow is computed. Demand
// scales linearly with temperature above 20 degC.
struct TankConfig {
    double capacity_l = 2000.0;
    double roof_area_m2 = 100.0;
    double runoff_coeff = 0.9;
    double base_demand_l = 150.0;        // liters/day
    double demand_temp_coeff = 0.0;      // fraction per degC above 20
    double initial_storage_l = 0.0;
};

struct DailyClimateRecord {
    CalendarDate date;
    double rain_mm = 0.0;
    double temp_c = 0.0;
};

struct DailyTankState {
    double inflow_l = 0.0;
    double demand_l = 0.0;
    double yield_l = 0.0;
    double storage_l = 0.0; // end of day
    double spill_l = 0.0;
};

void validate_tank_config(const TankConfig& cfg);
// Dates must advance in contiguous daily steps. 1 mm of rain on 1 m^2 is 1 L.
std::vector<DailyTankState> simulate_tank(const std::vector<DailyClimateRecord>& climate,
                                          const TankConfig& cfg);

std::vector<double> daily_yields(const std::vector<DailyTankState>& states);

// Calendar-month aggregation: yield and rainfall depth are summed,
// temperature averaged, and days with >= 1.0 mm counted as rain days.
std::vector<MonthlyRecord> aggregate_monthly(const std::vector<DailyClimateRecord>& climate,
                                             const std::vector<double>& yields,
                                             Schema schema);

} // namespace gknn
