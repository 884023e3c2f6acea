#include "lerchlab/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "lerchlab/errors.hpp"

namespace lerchlab {

using nlohmann::json;

ReportRecord make_record(std::string identity, std::string params, double residual, double tolerance,
                         long runtime_ms) {
    ReportRecord r;
    r.identity = std::move(identity);
    r.params = std::move(params);
    r.residual = residual;
    r.tolerance = tolerance;
    r.passed = !std::isnan(residual) && residual <= tolerance;
    r.runtime_ms = runtime_ms;
    return r;
}

namespace {

// JSON has no infinity; a diverged residual is written as a string.
json number(double x) {
    if (std::isfinite(x)) return x;
    if (std::isnan(x)) return "nan";
    return x > 0 ? "inf" : "-inf";
}

double read_number(const json& j) {
    if (j.is_number()) return j.get<double>();
    const std::string s = j.get<std::string>();
    if (s == "inf") return INFINITY;
    if (s == "-inf") return -INFINITY;
    return NAN;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::string records_to_json(const std::vector<ReportRecord>& records) {
    json arr = json::array();
    for (const auto& r : records) {
        arr.push_back({{"identity", r.identity},
                       {"params", r.params},
                       {"residual", number(r.residual)},
                       {"tolerance", number(r.tolerance)},
                       {"passed", r.passed},
                       {"runtime_ms", r.runtime_ms}});
    }
    return arr.dump(2) + "\n";
}

std::vector<ReportRecord> records_from_json(const std::string& text) {
    std::vector<ReportRecord> out;
    try {
        const json arr = json::parse(text);
        if (!arr.is_array()) throw ConfigError("report: expected a JSON array");
        for (const auto& j : arr) {
            ReportRecord r;
            r.identity = j.at("identity").get<std::string>();
            r.params = j.at("params").get<std::string>();
            r.residual = read_number(j.at("residual"));
            r.tolerance = read_number(j.at("tolerance"));
            r.passed = j.at("passed").get<bool>();
            r.runtime_ms = j.at("runtime_ms").get<long>();
            out.push_back(std::move(r));
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("report: malformed JSON: ") + e.what());
    }
    return out;
}

std::string records_to_csv(const std::vector<ReportRecord>& records) {
    std::ostringstream os;
    os << "identity,params,residual,tolerance,passed,runtime_ms\n";
    os << std::setprecision(6);
    for (const auto& r : records) {
        os << csv_field(r.identity) << ',' << csv_field(r.params) << ',' << r.residual << ',' << r.tolerance << ','
           << (r.passed ? "true" : "false") << ',' << r.runtime_ms << '\n';
    }
    return os.str();
}

}  // namespace lerchlab
