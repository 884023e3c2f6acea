#pragma once

#include <string>
#include <vector>

namespace lerchlab {

struct ReportRecord {
    std::string identity;
    std::string params;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    long runtime_ms = 0;
};

/// passed is derived here and nowhere else: residual <= tolerance, and a NaN
/// residual always fails.
ReportRecord make_record(std::string identity, std::string params, double residual, double tolerance,
                         long runtime_ms = 0);

std::string records_to_json(const std::vector<ReportRecord>& records);
std::vector<ReportRecord> records_from_json(const std::string& text);
std::string records_to_csv(const std::vector<ReportRecord>& records);

}  // namespace lerchlab
