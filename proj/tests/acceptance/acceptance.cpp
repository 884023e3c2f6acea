// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "lerchlab/checks.hpp"
#include "lerchlab/errors.hpp"

using namespace lerchlab;

namespace {

struct Outcome {
    bool passed = true;
    double worst = 0.0;  // largest residual / tolerance ratio over the records
    std::string first_failure;
};

Outcome summarize(const std::vector<ReportRecord>& recs) {
    Outcome o;
    for (const ReportRecord& r : recs) {
        const double ratio = r.tolerance > 0.0 ? r.residual / r.tolerance : (r.residual > 0.0 ? INFINITY : 0.0);
        if (!(ratio <= o.worst)) o.worst = std::isnan(ratio) ? INFINITY : std::max(o.worst, ratio);
        if (!r.passed && o.passed) {
            o.passed = false;
            o.first_failure = r.identity + " [" + r.params + "] residual " + std::to_string(r.residual) + " > " +
                              std::to_string(r.tolerance);
        }
    }
    return o;
}

struct Criterion {
    const char* name;
    std::function<std::vector<ReportRecord>(Rng&)> run;
};

void add(std::vector<ReportRecord>& out, std::vector<ReportRecord> more) {
    out.insert(out.end(), more.begin(), more.end());
}

const double kInf = std::numeric_limits<double>::infinity();

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"functional equations",
         [](Rng& rng) { return std::vector{functional_equation_check(rng, 100, 1e-7)}; }},
        {"Hecke eigenfunctions",
         [](Rng& rng) {
             std::vector<ReportRecord> out;
             for (cplx s : {cplx(3.0), cplx(2.0), cplx(0.5), cplx(0.5, 10.0)})
                 out.push_back(hecke_eigen_check(s, rng, 16, 50, 1e-8));
             return out;
         }},
        {"operator algebra", [](Rng& rng) { return operator_algebra_checks(rng, 6, 20, 1e-11); }},
        {"adjoint, norm and Lp bounds",
         [](Rng& rng) {
             const QuadratureGrid grid = QuadratureGrid::tensor(4, 20);
             std::vector<ReportRecord> out;
             for (int m = 1; m <= 8; ++m) {
                 out.push_back(adjoint_check(m, 20, grid, rng, 1e-7));
                 out.push_back(norm_identity_check(m, 20, grid, rng, 1e-8));
                 for (double p : {1.0, 2.0, kInf}) out.push_back(lp_bound_check(m, p, 5, rng));
             }
             return out;
         }},
        {"commutation relations",
         [](Rng& rng) {
             auto out = commutator_checks(rng, 20, StencilConfig{1e-4, StencilOrder::fourth}, 1e-5);
             out.push_back(stencil_order_check(rng, StencilOrder::fourth));
             return out;
         }},
        {"differential eigenvalues",
         [](Rng& rng) {
             std::vector<ReportRecord> out;
             for (double s : {2.5, 1.7, 0.5}) add(out, differential_eigen_checks(s, rng, 20, 1e-5));
             return out;
         }},
        {"eigenspace structure",
         [](Rng& rng) {
             std::vector<ReportRecord> out;
             for (cplx s : {cplx(2.0), cplx(0.5), cplx(-1.5), cplx(0.5, 10.0), cplx(-2.0)}) {
                 out.push_back(gram_check(s));
                 out.push_back(j_eigen_check(s, rng, 1e-10));
             }
             for (cplx s : {cplx(0.5), cplx(2.5), cplx(-1.5), cplx(0.5, 10.0)})
                 out.push_back(r_action_check(s, rng, 20, 1e-8));
             return out;
         }},
        {"characterization round trip",
         [](Rng&) {
             std::vector<ReportRecord> out;
             for (double s : {2.0, 0.7}) {
                 out.push_back(characterization_check(s, 1e-6));
                 out.push_back(counterexample_check(s));
             }
             return out;
         }},
        {"Kubert baseline",
         [](Rng& rng) {
             std::vector<ReportRecord> out;
             for (cplx s : {cplx(0.5), cplx(2.5), cplx(-1.5), cplx(0.3, 4.0)})
                 out.push_back(kubert_check(s, rng, 12, 10, 1e-9));
             return out;
         }},
        {"zeta operator partial sums", [](Rng& rng) { return std::vector{zeta_operator_check(3.0, 200, rng, 10)}; }},
    };

    int failed = 0;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Rng rng(1000 + i);
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = summarize(criteria[i].run(rng));
        } catch (const std::exception& e) {
            o.passed = false;
            o.worst = INFINITY;
            o.first_failure = std::string("error: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %2zu %-30s worst residual/tolerance %.3g  (%.1f s)\n", o.passed ? "PASS" : "FAIL", i + 1,
                    criteria[i].name, o.worst, secs);
        if (!o.passed) {
            std::printf("       %s\n", o.first_failure.c_str());
            ++failed;
        }
        std::fflush(stdout);
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%zu/%zu criteria passed in %.1f s\n", criteria.size() - failed, criteria.size(), total);
    return failed == 0 ? 0 : 1;
}
