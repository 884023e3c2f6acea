#pragma once

#include <string>
#include <vector>

#include "lerchlab/config.hpp"
#include "lerchlab/report.hpp"

namespace lerchlab {

/// Records of one check group. The group's random stream is seeded from
/// (seed, position of the group in the suite order), so a group produces the
/// same records whether it runs alone or with the others.
std::vector<ReportRecord> run_group(const std::string& group, const SuiteConfig& cfg);

/// Selected groups, run concurrently; records come back in suite order.
std::vector<ReportRecord> run_suite(const SuiteConfig& cfg);

bool all_passed(const std::vector<ReportRecord>& records);

}  // namespace lerchlab
