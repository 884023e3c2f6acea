#include "lerchlab/suite.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <random>

#include "lerchlab/checks.hpp"
#include "lerchlab/errors.hpp"

namespace lerchlab {

namespace {

std::size_t group_index(const std::string& group) {
    const auto& all = SuiteConfig::all_groups();
    const auto it = std::find(all.begin(), all.end(), group);
    if (it == all.end()) throw ConfigError("unknown group " + group);
    return std::size_t(it - all.begin());
}

void append(std::vector<ReportRecord>& out, std::vector<ReportRecord> more) {
    for (auto& r : more) out.push_back(std::move(r));
}

std::vector<ReportRecord> special_fns(const SuiteConfig& c, Rng& rng) {
    return {gamma_reflection_check(rng, c.special_samples), gamma_recurrence_check(rng, c.special_samples),
            strategy_agreement_check(rng, c.strip_samples), twisted_periodicity_check(rng)};
}

std::vector<ReportRecord> functional_equations(const SuiteConfig& c, Rng& rng) {
    std::vector<ReportRecord> out{functional_equation_check(rng, c.fe_samples)};
    for (const cplx& s : c.eigen_s) {
        // The R-action identity needs both gamma factors finite.
        if (s.imag() == 0.0 && s.real() == std::round(s.real())) continue;
        out.push_back(r_action_check(s, rng));
    }
    return out;
}

std::vector<ReportRecord> hecke_eigen(const SuiteConfig& c, Rng& rng) {
    std::vector<ReportRecord> out;
    for (const cplx& s : c.hecke_s) out.push_back(hecke_eigen_check(s, rng, c.hecke_m_max, c.hecke_points));
    for (const cplx& s : c.eigen_s)
        if (s.real() > 0.0 && s.real() < 1.0) out.push_back(hecke_family_check(s, rng));
    append(out, operator_algebra_checks(rng, c.algebra_m_max, c.algebra_points));
    return out;
}

std::vector<ReportRecord> commutators(const SuiteConfig& c, Rng& rng) {
    std::vector<ReportRecord> out = commutator_checks(rng, c.commutator_points, StencilConfig{c.stencil_h});
    out.push_back(stencil_order_check(rng, StencilOrder::fourth));
    out.push_back(stencil_order_check(rng, StencilOrder::second));
    for (double s : c.diff_s) append(out, differential_eigen_checks(s, rng, c.diff_points));
    return out;
}

std::vector<ReportRecord> adjoint(const SuiteConfig& c, Rng& rng) {
    const QuadratureGrid grid = QuadratureGrid::tensor(c.grid_panels, c.grid_points);
    std::vector<ReportRecord> out;
    for (int m = 1; m <= c.adjoint_m_max; ++m) {
        out.push_back(adjoint_check(m, c.adjoint_trials, grid, rng));
        out.push_back(norm_identity_check(m, c.adjoint_trials, grid, rng));
    }
    for (double p : {1.0, 2.0}) out.push_back(r_isometry_check(p, c.adjoint_trials, grid, rng));
    for (int m : {1, 2, 3}) {
        const double inf = std::numeric_limits<double>::infinity();
        for (double p : {1.0, 2.0, inf}) out.push_back(lp_bound_check(m, p, 5, rng));
    }
    return out;
}

std::vector<ReportRecord> characterization(const SuiteConfig& c, Rng& rng) {
    std::vector<ReportRecord> out;
    for (const cplx& s : c.eigen_s) {
        out.push_back(gram_check(s));
        out.push_back(j_eigen_check(s, rng));
    }
    for (double s : c.char_s) {
        out.push_back(characterization_check(s));
        out.push_back(counterexample_check(s));
    }
    return out;
}

std::vector<ReportRecord> milnor_baseline(const SuiteConfig& c, Rng& rng) {
    std::vector<ReportRecord> out;
    for (const cplx& s : c.kubert_s) out.push_back(kubert_check(s, rng, c.kubert_m_max));
    return out;
}

std::vector<ReportRecord> zeta_operator(const SuiteConfig& c, Rng& rng) {
    return {zeta_operator_check(c.zeta_operator_s, c.zeta_operator_M, rng, c.zeta_operator_points)};
}

}  // namespace

std::vector<ReportRecord> run_group(const std::string& group, const SuiteConfig& cfg) {
    const std::size_t idx = group_index(group);
    std::seed_seq seq{std::uint32_t(cfg.seed), std::uint32_t(cfg.seed >> 32), std::uint32_t(idx)};
    Rng rng(seq);
    std::vector<ReportRecord> out;
    switch (idx) {
        case 0: out = special_fns(cfg, rng); break;
        case 1: out = functional_equations(cfg, rng); break;
        case 2: out = hecke_eigen(cfg, rng); break;
        case 3: out = commutators(cfg, rng); break;
        case 4: out = adjoint(cfg, rng); break;
        case 5: out = characterization(cfg, rng); break;
        case 6: out = milnor_baseline(cfg, rng); break;
        case 7: out = zeta_operator(cfg, rng); break;
    }
    for (ReportRecord& r : out) {
        r = make_record(group + "/" + r.identity, r.params, r.residual, r.tolerance * cfg.tolerance_scale,
                        cfg.timing ? r.runtime_ms : 0);
    }
    return out;
}

std::vector<ReportRecord> run_suite(const SuiteConfig& cfg) {
    std::vector<std::string> groups;
    for (const auto& g : SuiteConfig::all_groups())
        if (std::find(cfg.groups.begin(), cfg.groups.end(), g) != cfg.groups.end()) groups.push_back(g);

    std::vector<std::vector<ReportRecord>> parts(groups.size());
    std::vector<std::exception_ptr> errors(groups.size());
    // One group per thread; the kernels inside a group then run on that
    // thread alone because nested parallel regions are inactive. A check that
    // cannot run (degenerate s in the config, say) becomes a failed record.
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < long(groups.size()); ++i) {
        try {
            parts[i] = run_group(groups[i], cfg);
        } catch (const ConfigError&) {
            errors[i] = std::current_exception();
        } catch (const Error& e) {
            parts[i] = {make_record(groups[i] + "/error", e.what(), std::numeric_limits<double>::infinity(), 0.0)};
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<ReportRecord> out;
    for (auto& p : parts) append(out, std::move(p));
    return out;
}

bool all_passed(const std::vector<ReportRecord>& records) {
    return std::all_of(records.begin(), records.end(), [](const ReportRecord& r) { return r.passed; });
}

}  // namespace lerchlab
