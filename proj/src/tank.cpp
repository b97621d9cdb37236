#include "gknn/tank.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gknn {

void validate_tank_config(const TankConfig& cfg) {
    const auto bad = [](double x) { return !std::isfinite(x) || x < 0.0; };
    if (bad(cfg.capacity_l) || bad(cfg.roof_area_m2) || bad(cfg.base_demand_l) ||
        bad(cfg.demand_temp_coeff) || bad(cfg.initial_storage_l)) {
        throw std::invalid_argument("tank config parameters must be finite and >= 0");
    }
    if (!std::isfinite(cfg.runoff_coeff) || cfg.runoff_coeff < 0.0 ||
        cfg.runoff_coeff > 1.0) {
        throw std::invalid_argument("runoff coefficient must be in [0, 1]");
    }
    if (cfg.initial_storage_l > cfg.capacity_l) {
        throw std::invalid_argument("initial storage exceeds tank capacity");
    }
}

std::vector<DailyTankState> simulate_tank(const std::vector<DailyClimateRecord>& climate,
                                          const TankConfig& cfg) {
    validate_tank_config(cfg);
    for (std::size_t i = 0; i < climate.size(); ++i) {
        const DailyClimateRecord& d = climate[i];
        if (!valid_date(d.date)) {
            throw std::invalid_argument("day " + std::to_string(i + 1) +
                                        ": invalid calendar date");
        }
        if (!std::isfinite(d.rain_mm) || d.rain_mm < 0.0 || !std::isfinite(d.temp_c)) {
            throw std::invalid_argument("day " + std::to_string(i + 1) +
                                        ": rainfall must be >= 0 and values finite");
        }
        if (i > 0 && !(climate[i].date == next_day(climate[i - 1].date))) {
            throw std::invalid_argument("calendar gap before " +
                                        format_date(climate[i].date) +
                                        " (dates must advance in daily steps)");
        }
    }

    std::vector<DailyTankState> out;
    out.reserve(climate.size());
    double storage = cfg.initial_storage_l;
    for (const DailyClimateRecord& day : climate) {
        DailyTankState s;
        s.inflow_l = cfg.runoff_coeff * cfg.roof_area_m2 * day.rain_mm; // 1 mm*m^2 = 1 L
        s.demand_l = cfg.base_demand_l *
                     (1.0 + cfg.demand_temp_coeff * std::max(0.0, day.temp_c - 20.0));
        const double available = storage + s.inflow_l;
        s.yield_l = std::min(s.demand_l, available);
        const double after = available - s.yield_l;
        s.storage_l = std::min(after, cfg.capacity_l);
        s.spill_l = after - s.storage_l;
        storage = s.storage_l;
        out.push_back(s);
    }
    return out;
}

std::vector<double> daily_yields(const std::vector<DailyTankState>& states) {
    std::vector<double> y(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) y[i] = states[i].yield_l;
    return y;
}

std::vector<MonthlyRecord> aggregate_monthly(const std::vector<DailyClimateRecord>& climate,
                                             const std::vector<double>& yields,
                                             Schema schema) {
    if (climate.size() != yields.size()) {
        throw std::invalid_argument("daily climate and yield series lengths differ");
    }

    std::vector<MonthlyRecord> out;
    std::size_t i = 0;
    while (i < climate.size()) {
        const int year = climate[i].date.year;
        const int month = climate[i].date.month;
        double yield_sum = 0.0;
        double rain_sum = 0.0;
        double temp_sum = 0.0;
        double rain_days = 0.0;
        std::size_t days = 0;
        for (; i < climate.size() && climate[i].date.year == year &&
               climate[i].date.month == month;
             ++i, ++days) {
            yield_sum += yields[i];
            rain_sum += climate[i].rain_mm;
            temp_sum += climate[i].temp_c;
            if (climate[i].rain_mm >= 1.0) rain_days += 1.0;
        }
        const double avg_temp = temp_sum / static_cast<double>(days);

        MonthlyRecord rec;
        rec.month_label = month;
        rec.yield = yield_sum;
        switch (schema) {
        case Schema::coombes:
            rec.climate = {avg_temp, rain_days, rain_sum};
            break;
        case Schema::knn:
        case Schema::bootstrap:
            rec.climate = {rain_sum};
            break;
        }
        out.push_back(std::move(rec));
    }
    return out;
}

} // namespace gknn
