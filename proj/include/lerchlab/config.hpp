#pragma once

// Flat key = value configuration for the verification suite. Blank lines
// and lines starting with '#' are ignored; unknown keys are errors.

#include <cstdint>
#include <string>
#include <vector>

#include "lerchlab/special_functions.hpp"

namespace lerchlab {

struct SuiteConfig {
    std::uint64_t seed = 42;
    std::vector<std::string> groups;  // empty list means nothing runs
    double tolerance_scale = 1.0;
    bool timing = false;  // when off runtime_ms is written as 0 so reports are byte-stable

    int special_samples = 200;
    int strip_samples = 100;
    int fe_samples = 100;

    std::vector<cplx> hecke_s{3.0, 2.0, 0.5, {0.5, 10.0}, -1.5};
    int hecke_m_max = 16;
    int hecke_points = 50;
    int algebra_m_max = 6;
    int algebra_points = 20;

    int commutator_points = 20;
    double stencil_h = 1e-4;
    std::vector<double> diff_s{2.5, 1.7, 0.5};
    int diff_points = 20;

    int adjoint_m_max = 8;
    int adjoint_trials = 20;
    int grid_panels = 4;
    int grid_points = 20;

    std::vector<cplx> eigen_s{2.0, 0.5, -1.5, {0.5, 10.0}, -2.0};
    std::vector<double> char_s{2.0, 0.7};

    std::vector<cplx> kubert_s{0.5, 2.5, -1.5, {0.3, 4.0}};
    int kubert_m_max = 12;

    double zeta_operator_s = 3.0;
    int zeta_operator_M = 200;
    int zeta_operator_points = 10;

    /// All group names in suite order.
    static const std::vector<std::string>& all_groups();
    /// Defaults with every group selected.
    static SuiteConfig defaults();
};

/// Throws ConfigError on unknown keys, malformed values or unknown groups.
SuiteConfig parse_config(const std::string& text);
SuiteConfig load_config(const std::string& path);

/// "2", "-1.5", "0.5+10i", "0.3-2i", "4i".
cplx parse_complex(const std::string& text);

}  // namespace lerchlab
