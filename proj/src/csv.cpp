#include "gknn/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gknn {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void atomic_write_file(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot open " + tmp + " for writing");
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) {
            throw std::runtime_error("write failed for " + tmp);
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        throw std::runtime_error("cannot rename " + tmp + " to " + path);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace {

[[noreturn]] void fail_at(const std::string& path, std::size_t line,
                          const std::string& message) {
    throw std::runtime_error(path + ":" + std::to_string(line) + ": " + message);
}

std::vector<std::string> split_comma(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

double parse_double_field(const std::string& field, const std::string& path,
                          std::size_t line) {
    double value = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || field.empty()) {
        fail_at(path, line, "malformed number '" + field + "'");
    }
    return value;
}

int parse_int_field(const std::string& field, const std::string& path,
                    std::size_t line) {
    int value = 0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || field.empty()) {
        fail_at(path, line, "malformed integer '" + field + "'");
    }
    return value;
}

// Rows of a CSV file with the header consumed; strips trailing CR so CRLF
// inputs are accepted.
struct CsvFile {
    std::string path;
    std::vector<std::string> header;
    std::vector<std::pair<std::size_t, std::vector<std::string>>> rows; // (line, fields)
};

CsvFile load_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    CsvFile file;
    file.path = path;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (file.header.empty()) {
            file.header = split_comma(line);
        } else {
            file.rows.emplace_back(line_no, split_comma(line));
        }
    }
    if (file.header.empty()) {
        throw std::runtime_error(path + ": file is empty (missing header row)");
    }
    return file;
}

std::string join_comma(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += fields[i];
    }
    return out;
}

void require_columns(const CsvFile& file, std::size_t count) {
    for (const auto& [line, fields] : file.rows) {
        if (fields.size() != count) {
            fail_at(file.path, line,
                    "expected " + std::to_string(count) + " fields, got " +
                        std::to_string(fields.size()));
        }
    }
}

const std::vector<std::string> kClimateHeader = {"date", "rain_mm", "temp_c"};

std::vector<std::string> training_header(Schema schema) {
    switch (schema) {
    case Schema::coombes:
        return {"month_label", "avg_temp_c", "rain_days", "rain_depth_mm", "yield_l"};
    case Schema::knn:
        return {"month_label", "rain_depth_mm", "yield_l"};
    case Schema::bootstrap:
        return {"rain_depth_mm", "yield_l"};
    }
    throw std::logic_error("unknown schema");
}

std::vector<std::string> query_header(Schema schema) {
    auto h = training_header(schema);
    h.pop_back(); // yield_l
    return h;
}

Schema schema_from_header(const CsvFile& file, bool with_yield) {
    for (Schema s : {Schema::coombes, Schema::knn, Schema::bootstrap}) {
        if (file.header == (with_yield ? training_header(s) : query_header(s))) {
            return s;
        }
    }
    fail_at(file.path, 1, "unrecognized header '" + join_comma(file.header) + "'");
}

} // namespace

std::vector<DailyClimateRecord> read_daily_climate_csv(const std::string& path) {
    const CsvFile file = load_csv(path);
    if (file.header != kClimateHeader) {
        fail_at(path, 1, "expected header 'date,rain_mm,temp_c'");
    }
    require_columns(file, 3);
    std::vector<DailyClimateRecord> out;
    out.reserve(file.rows.size());
    for (const auto& [line, fields] : file.rows) {
        DailyClimateRecord rec;
        try {
            rec.date = parse_date(fields[0]);
        } catch (const std::exception& e) {
            fail_at(path, line, e.what());
        }
        rec.rain_mm = parse_double_field(fields[1], path, line);
        rec.temp_c = parse_double_field(fields[2], path, line);
        out.push_back(rec);
    }
    return out;
}

std::vector<MonthlyRecord> read_monthly_training_csv(const std::string& path,
                                                     Schema& schema_out) {
    const CsvFile file = load_csv(path);
    schema_out = schema_from_header(file, true);
    const bool labeled = schema_out != Schema::bootstrap;
    const std::size_t climate_cols = schema_climate_columns(schema_out);
    require_columns(file, climate_cols + (labeled ? 2 : 1));

    std::vector<MonthlyRecord> out;
    out.reserve(file.rows.size());
    for (const auto& [line, fields] : file.rows) {
        MonthlyRecord rec;
        std::size_t f = 0;
        rec.month_label = labeled ? parse_int_field(fields[f++], path, line) : 0;
        for (std::size_t c = 0; c < climate_cols; ++c) {
            rec.climate.push_back(parse_double_field(fields[f++], path, line));
        }
        rec.yield = parse_double_field(fields[f], path, line);
        if (labeled && (rec.month_label < 1 || rec.month_label > 12)) {
            fail_at(path, line, "month label must be in 1..12");
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<MonthlyQuery> read_query_series_csv(const std::string& path,
                                                Schema& schema_out) {
    const CsvFile file = load_csv(path);
    schema_out = schema_from_header(file, false);
    const bool labeled = schema_out != Schema::bootstrap;
    const std::size_t climate_cols = schema_climate_columns(schema_out);
    require_columns(file, climate_cols + (labeled ? 1 : 0));

    std::vector<MonthlyQuery> out;
    out.reserve(file.rows.size());
    for (const auto& [line, fields] : file.rows) {
        MonthlyQuery q;
        std::size_t f = 0;
        q.month_label = labeled ? parse_int_field(fields[f++], path, line) : 0;
        for (std::size_t c = 0; c < climate_cols; ++c) {
            q.climate.push_back(parse_double_field(fields[f++], path, line));
        }
        if (labeled && (q.month_label < 1 || q.month_label > 12)) {
            fail_at(path, line, "month label must be in 1..12");
        }
        out.push_back(std::move(q));
    }
    return out;
}

std::vector<double> read_actual_yields_csv(const std::string& path) {
    const CsvFile file = load_csv(path);
    if (file.header == std::vector<std::string>{"yield_l"}) {
        require_columns(file, 1);
        std::vector<double> out;
        out.reserve(file.rows.size());
        for (const auto& [line, fields] : file.rows) {
            out.push_back(parse_double_field(fields[0], path, line));
        }
        return out;
    }
    Schema schema;
    const auto records = read_monthly_training_csv(path, schema);
    std::vector<double> out;
    out.reserve(records.size());
    for (const auto& r : records) out.push_back(r.yield);
    return out;
}

void write_daily_yield_csv(const std::string& path,
                           const std::vector<DailyClimateRecord>& climate,
                           const std::vector<DailyTankState>& states) {
    if (climate.size() != states.size()) {
        throw std::invalid_argument("climate and state series lengths differ");
    }
    std::string out = "date,yield_l\n";
    for (std::size_t i = 0; i < states.size(); ++i) {
        out += format_date(climate[i].date);
        out += ',';
        out += format_double(states[i].yield_l);
        out += '\n';
    }
    atomic_write_file(path, out);
}

void write_monthly_training_csv(const std::string& path,
                                const std::vector<MonthlyRecord>& records,
                                Schema schema) {
    std::string out = join_comma(training_header(schema)) + "\n";
    const bool labeled = schema != Schema::bootstrap;
    for (const MonthlyRecord& r : records) {
        std::string line;
        if (labeled) {
            line += std::to_string(r.month_label);
            line += ',';
        }
        for (double c : r.climate) {
            line += format_double(c);
            line += ',';
        }
        line += format_double(r.yield);
        out += line;
        out += '\n';
    }
    atomic_write_file(path, out);
}

void write_upscale_csv(const std::string& path,
                       const std::vector<std::vector<double>>& runs_yields,
                       const std::vector<int>& month_labels) {
    std::string out = "run,t,month_label,yield_l\n";
    for (std::size_t r = 0; r < runs_yields.size(); ++r) {
        const auto& y = runs_yields[r];
        if (y.size() != month_labels.size()) {
            throw std::invalid_argument("yield series and month labels differ in length");
        }
        for (std::size_t t = 0; t < y.size(); ++t) {
            out += std::to_string(r + 1);
            out += ',';
            out += std::to_string(t + 1);
            out += ',';
            out += std::to_string(month_labels[t]);
            out += ',';
            out += format_double(y[t]);
            out += '\n';
        }
    }
    atomic_write_file(path, out);
}

void write_moments_csv(const std::string& path, const MomentReport& report) {
    std::string out = "t,expected_yield_l,variance,bias_sq,expected_error\n";
    for (const MonthMoments& mm : report.months) {
        out += std::to_string(mm.t);
        out += ',';
        out += format_double(mm.expected_yield);
        out += ',';
        out += format_double(mm.variance);
        out += ',';
        if (mm.bias_sq) out += format_double(*mm.bias_sq);
        out += ',';
        if (mm.expected_error) out += format_double(*mm.expected_error);
        out += '\n';
    }
    atomic_write_file(path, out);
}

std::string annual_summary_text(const AnnualMoments& annual) {
    const double years = static_cast<double>(annual.years);
    std::string out;
    out += "years=" + std::to_string(annual.years) + "\n";
    out += "expected_annual_yield_l=" + format_double(annual.expected_annual_yield) + "\n";
    out += "annual_variance=" + format_double(annual.annual_variance) + "\n";
    out += "variance_constant=" + format_double(annual.variance_constant) + "\n";
    out += "variance_bound=" + format_double(annual.variance_constant / years) + "\n";
    out += std::string("bound_ok=") + (annual.bound_ok ? "1" : "0") + "\n";
    out += "total_yield_variance=" + format_double(annual.total_yield_variance) + "\n";
    return out;
}

void write_comparison_csv(const std::string& path, const ComparisonTable& table) {
    std::string out = "quantity,t,analytic,empirical,se,z,flagged\n";
    for (const ComparisonRow& row : table.rows) {
        out += row.quantity;
        out += ',';
        out += std::to_string(row.t);
        out += ',';
        out += format_double(row.analytic);
        out += ',';
        out += format_double(row.empirical);
        out += ',';
        out += format_double(row.se);
        out += ',';
        out += format_double(row.z);
        out += ',';
        out += row.flagged ? '1' : '0';
        out += '\n';
    }
    atomic_write_file(path, out);
}

void write_nu_csv(const std::string& path, const EmpiricalDistribution& nu) {
    std::string out = "class_key,count,frequency\n";
    for (const auto& [key, stat] : nu.classes) {
        std::string key_text;
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (i) key_text += '-';
            key_text += std::to_string(key[i]);
        }
        out += key_text;
        out += ',';
        out += std::to_string(stat.count);
        out += ',';
        out += format_double(stat.frequency);
        out += '\n';
    }
    atomic_write_file(path, out);
}

void write_kernel_error_csv(const std::string& path,
                            const std::vector<KernelErrorRow>& rows) {
    std::string out = "n,k_n,seed,sup_error,mean_error\n";
    for (const KernelErrorRow& row : rows) {
        out += std::to_string(row.n);
        out += ',';
        out += std::to_string(row.k_n);
        out += ',';
        out += std::to_string(row.seed);
        out += ',';
        out += format_double(row.sup_error);
        out += ',';
        out += format_double(row.mean_error);
        out += '\n';
    }
    atomic_write_file(path, out);
}

} // namespace gknn
