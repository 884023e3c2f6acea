#include "lerchlab/checks.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "lerchlab/eigenspace.hpp"
#include "lerchlab/em_sum.hpp"
#include "lerchlab/errors.hpp"
#include "lerchlab/functions.hpp"
#include "lerchlab/kernels.hpp"
#include "lerchlab/lerch.hpp"

namespace lerchlab {

using detail::expi2pi;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double rel(cplx x, cplx ref) { return std::abs(x - ref) / (1.0 + std::abs(ref)); }

double worse(double acc, double r) { return std::isnan(r) ? kInf : std::max(acc, r); }

std::string fmt(cplx s) {
    std::ostringstream os;
    os << "s=" << s.real();
    if (s.imag() != 0.0) os << (s.imag() > 0 ? "+" : "") << s.imag() << "i";
    return os.str();
}

cplx power(double m, cplx s) { return std::exp(s * std::log(m)); }

// Largest value of fn over the points, evaluated in parallel.
double parallel_max(std::span<const Point> pts, const CoreFn& fn) {
    std::vector<cplx> out(pts.size());
    kernels::evaluate_parallel(TwistedFn::plane(fn), pts, out);
    double worst = 0.0;
    for (const cplx& v : out) worst = worse(worst, v.real());
    return worst;
}

class Stopwatch {
public:
    long ms() const {
        return long(std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0_)
                        .count());
    }

private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

cplx random_cplx(Rng& rng, double scale) {
    std::normal_distribution<double> N(0.0, scale);
    const double re = N(rng);
    const double im = N(rng);
    return {re, im};
}

double norm_or_sup(const TwistedFn& F, double p, const QuadratureGrid& grid) { return lp_norm(F, p, grid); }

// Tensor grid whose panel count is the smallest multiple of m not below the
// given one, so panel edges contain (1/m)Z without the lcm blow-up.
QuadratureGrid grid_for(int m, const QuadratureGrid& grid) {
    const int p = grid.panels_per_axis;
    const int q = m * ((p + m - 1) / m);
    return q == p ? grid : QuadratureGrid::tensor(q, grid.points_per_panel);
}

}  // namespace

TwistedFn random_test_function(Rng& rng, int degree) {
    if (degree < 0) throw DomainError("random_test_function: negative degree");
    std::vector<cplx> alpha(2 * degree + 1);
    for (int k = -degree; k <= degree; ++k) alpha[k + degree] = random_cplx(rng, 1.0 / (1.0 + std::abs(k)));
    std::array<cplx, 3> beta;
    for (cplx& b : beta) b = random_cplx(rng, 0.5);
    beta[0] += 1.0;
    return TwistedFn(
        [alpha, beta, degree](double a, double c) {
            const cplx z = expi2pi(a);
            cplx zk = expi2pi(-double(degree) * a);
            cplx p = 0.0;
            for (const cplx& al : alpha) {
                p += al * zk;
                zk *= z;
            }
            const double s = std::sin(kPi * c);
            const double s2 = s * s;
            const cplx bump = s2 * s2 * (beta[0] + beta[1] * std::cos(2 * kPi * c) + beta[2] * std::sin(2 * kPi * c));
            return p * bump;
        },
        1, "test");
}

std::vector<Point> sample_points(Rng& rng, int n, int d, double margin) {
    if (n < 0 || d < 1) throw DomainError("sample_points: bad arguments");
    std::uniform_real_distribution<double> U(0.0, 1.0);
    std::vector<Point> pts;
    pts.reserve(n);
    while (int(pts.size()) < n) {
        const double a = U(rng), c = U(rng);
        if (lattice_distance(a, d) * d < margin || lattice_distance(c, d) * d < margin) continue;
        pts.push_back({a, c});
    }
    return pts;
}

// ---------------------------------------------------------------- gamma, zeta

namespace {

// Random s in the rectangle Re s in [-3, 4], |Im s| <= 10, kept away from
// the integers so that neither gamma factor sits on a pole or zero.
cplx random_gamma_point(Rng& rng) {
    std::uniform_real_distribution<double> X(-3.0, 4.0), Y(-10.0, 10.0);
    for (;;) {
        const cplx s{X(rng), Y(rng)};
        if (std::abs(s.imag()) > 0.05 || detail::dist_to_integer(s.real()) > 0.05) return s;
    }
}

}  // namespace

ReportRecord gamma_reflection_check(Rng& rng, int samples, double tol) {
    Stopwatch sw;
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const cplx s = random_gamma_point(rng);
        for (Parity p : {Parity::plus, Parity::minus}) {
            const GammaValue g1 = tate_gamma(s, p), g2 = tate_gamma(1.0 - s, p);
            worst = worse(worst, (g1.is_pole || g2.is_pole) ? kInf : std::abs(g1.value * g2.value - 1.0));
        }
    }
    return make_record("special.tate_gamma_reflection", "samples=" + std::to_string(samples), worst, tol, sw.ms());
}

ReportRecord gamma_recurrence_check(Rng& rng, int samples, double tol) {
    Stopwatch sw;
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const cplx z = random_gamma_point(rng);
        const GammaValue g0 = complex_gamma(z), g1 = complex_gamma(z + 1.0);
        double r = kInf;
        if (!g0.is_pole && !g1.is_pole) r = std::abs(g1.value - z * g0.value) / std::abs(g1.value);
        worst = worse(worst, r);
        const GammaValue m = gamma_R(z, Parity::minus), p = gamma_R(z + 1.0, Parity::plus);
        if (m.is_pole != p.is_pole || (!m.is_pole && m.value != p.value)) worst = kInf;
    }
    return make_record("special.gamma_recurrence", "samples=" + std::to_string(samples), worst, tol, sw.ms());
}

ReportRecord strategy_agreement_check(Rng& rng, int samples, double tol) {
    Stopwatch sw;
    std::uniform_real_distribution<double> X(1.0, 1.5), Y(-10.0, 10.0), U(0.02, 0.98);
    std::vector<LerchParams> ps;
    for (int i = 0; i < samples; ++i) {
        double x = X(rng);
        if (x == 1.0) x = 1.5;
        ps.push_back({cplx{x, Y(rng)}, U(rng), U(rng)});
    }
    std::vector<Point> idx;
    for (int i = 0; i < samples; ++i) idx.push_back({double(i), 0.0});
    const double worst = parallel_max(idx, [&ps](double i, double) {
        const LerchParams& p = ps[std::size_t(i)];
        return cplx(std::abs(eval_strip(p).value - zeta_direct(p).value));
    });
    return make_record("lerch.strategy_agreement", "samples=" + std::to_string(samples), worst, tol, sw.ms());
}

ReportRecord twisted_periodicity_check(Rng& rng, int samples, double tol) {
    Stopwatch sw;
    std::uniform_real_distribution<double> X(-1.0, 3.0), Y(-5.0, 5.0);
    double worst = 0.0;
    const auto pts = sample_points(rng, samples);
    // Differences are measured against max(1, |F|), the scale the evaluation
    // tolerance refers to.
    auto err = [](cplx x, cplx ref) { return std::abs(x - ref) / std::max(1.0, std::abs(ref)); };
    for (const Point& q : pts) {
        const cplx s{X(rng), Y(rng)};
        const TwistedFn F = zeta_star_fn(s);
        const cplx f = F(q.a, q.c);
        worst = worse(worst, err(F(q.a + 1.0, q.c), f));
        worst = worse(worst, err(F(q.a, q.c + 1.0), expi2pi(-q.a) * f));
        // Against the direct two-sided sum for Re s > 1.
        if (s.real() > 1.0) {
            const cplx star = lerch_star({s, q.a, q.c - 1.0}).value;
            worst = worse(worst, err(F(q.a, q.c - 1.0), star));
        }
    }
    return make_record("lerch.twisted_periodicity", "samples=" + std::to_string(samples), worst, tol, sw.ms());
}

ReportRecord functional_equation_check(Rng& rng, int samples, double tol) {
    Stopwatch sw;
    std::uniform_real_distribution<double> X(0.0, 1.0), Y(-20.0, 20.0), U(0.02, 0.98);
    struct Sample {
        cplx s;
        double a, c;
    };
    std::vector<Sample> ss;
    for (int i = 0; i < samples; ++i) {
        double x = (i % 2 == 0) ? 0.5 : X(rng);
        if (x == 0.0) x = 0.5;
        ss.push_back({cplx{x, Y(rng)}, U(rng), U(rng)});
    }
    std::vector<Point> idx;
    for (int i = 0; i < samples; ++i) idx.push_back({double(i), 0.0});
    const double worst = parallel_max(idx, [&ss](double i, double) {
        const Sample& q = ss[std::size_t(i)];
        double r = 0.0;
        for (Parity p : {Parity::plus, Parity::minus}) {
            const EvalResult lhs = completed_L({q.s, q.a, q.c}, p);
            const EvalResult rhs = completed_L({1.0 - q.s, 1.0 - q.c, q.a}, p);
            const cplx expected = root_number(p) * expi2pi(-q.a * q.c) * rhs.value;
            const double g = std::abs(gamma_R(q.s, p).value);
            const double L = std::abs(lhs.value) / g;
            r = worse(r, std::abs(lhs.value - expected) / (g * (1.0 + L)));
        }
        return cplx(r);
    });
    return make_record("lerch.functional_equation", "samples=" + std::to_string(samples), worst, tol, sw.ms());
}

ReportRecord r_action_check(cplx s, Rng& rng, int points, double tol) {
    Stopwatch sw;
    const auto pts = sample_points(rng, points);
    double worst = 0.0;
    for (Parity p : {Parity::plus, Parity::minus}) {
        const GammaValue g = tate_gamma(1.0 - s, p);
        if (g.is_pole) throw DegenerateError("r_action_check: gamma pole at " + fmt(s));
        const cplx k = g.value / root_number(p);
        const TwistedFn RL = apply_R(L_fn(s, p), 1);
        const TwistedFn L1 = L_fn(1.0 - s, p);
        worst = worse(worst, parallel_max(pts, [&](double a, double c) {
                          return cplx(rel(RL(a, c), k * L1(a, c)));
                      }));
    }
    return make_record("eigenspace.R_action", fmt(s), worst, tol, sw.ms());
}

// ---------------------------------------------------------------- Hecke

ReportRecord hecke_eigen_check(cplx s, Rng& rng, int m_max, int points, double tol) {
    Stopwatch sw;
    const EigenBasis B = build_eigenspace(s);
    double worst = 0.0;
    for (int m = 2; m <= m_max; ++m) {
        const auto pts = sample_points(rng, points, m);
        const cplx lambda = power(m, -s);
        for (const TwistedFn* F : {&B.active_first(), &B.active_second()}) {
            const TwistedFn T = apply_hecke(OpKind::T, m, *F);
            worst = worse(worst, parallel_max(pts, [&](double a, double c) {
                              const cplx f = (*F)(a, c);
                              return cplx(std::abs(T(a, c) - lambda * f) / (1.0 + std::abs(f)));
                          }));
        }
    }
    std::ostringstream params;
    params << fmt(s) << " m<=" << m_max << " points=" << points;
    return make_record("hecke.eigenfunction", params.str(), worst, tol, sw.ms());
}

ReportRecord hecke_family_check(cplx s, Rng& rng, int m_max, int points, double tol) {
    Stopwatch sw;
    const EigenBasis B = build_eigenspace(s);
    double worst = 0.0;
    for (int m = 2; m <= m_max; ++m) {
        const auto pts = sample_points(rng, points, m);
        for (OpKind kind : {OpKind::T, OpKind::S, OpKind::T_vee, OpKind::S_vee}) {
            const bool s_like = kind == OpKind::S || kind == OpKind::S_vee;
            const cplx lambda = s_like ? power(m, s - 1.0) : power(m, -s);
            for (const TwistedFn* F : {&B.active_first(), &B.active_second()}) {
                const TwistedFn H = apply_hecke(kind, m, *F);
                worst = worse(worst, parallel_max(pts, [&](double a, double c) {
                                  const cplx f = (*F)(a, c);
                                  return cplx(std::abs(H(a, c) - lambda * f) / (1.0 + std::abs(f)));
                              }));
            }
        }
    }
    std::ostringstream params;
    params << fmt(s) << " m<=" << m_max << " points=" << points;
    return make_record("hecke.four_families", params.str(), worst, tol, sw.ms());
}

std::vector<ReportRecord> operator_algebra_checks(Rng& rng, int m_max, int points, double tol) {
    const TwistedFn F = random_test_function(rng);
    std::vector<ReportRecord> out;
    const std::string params = "m<=" + std::to_string(m_max) + " points=" + std::to_string(points);

    auto pointwise = [&](const TwistedFn& X, const TwistedFn& Y, cplx k, std::span<const Point> pts) {
        return parallel_max(pts, [&](double a, double c) { return cplx(std::abs(X(a, c) - k * Y(a, c))); });
    };
    auto run = [&](const std::string& name, auto&& body) {
        Stopwatch sw;
        double worst = 0.0;
        for (int m = 1; m <= m_max; ++m)
            for (int n = 1; n <= m_max; ++n) {
                const auto pts = sample_points(rng, points, m * n);
                worst = worse(worst, body(m, n, pts));
            }
        out.push_back(make_record("algebra." + name, params, worst, tol, sw.ms()));
    };

    run("T_m_T_n", [&](int m, int n, std::span<const Point> pts) {
        return pointwise(apply_hecke(OpKind::T, m, apply_hecke(OpKind::T, n, F)), apply_hecke(OpKind::T, m * n, F),
                         1.0, pts);
    });
    run("S_m_T_m", [&](int m, int n, std::span<const Point> pts) {
        if (n != 1) return 0.0;
        return pointwise(apply_hecke(OpKind::S, m, apply_hecke(OpKind::T, m, F)), F, 1.0 / m, pts);
    });
    run("T_vee", [&](int m, int n, std::span<const Point> pts) {
        if (n != 1) return 0.0;
        return pointwise(apply_hecke(OpKind::T_vee, m, F), apply_hecke(OpKind::T, m, F), 1.0, pts);
    });
    run("S_vee", [&](int m, int n, std::span<const Point> pts) {
        if (n != 1) return 0.0;
        return pointwise(apply_hecke(OpKind::S_vee, m, F), apply_hecke(OpKind::S, m, F), 1.0, pts);
    });
    run("S_m_T_l", [&](int m, int l, std::span<const Point> pts) {
        return pointwise(apply_hecke(OpKind::S, m, apply_hecke(OpKind::T, l, F)),
                         apply_hecke(OpKind::T, l, apply_hecke(OpKind::S, m, F)), 1.0, pts);
    });
    run("S_m_T_dm", [&](int m, int d, std::span<const Point> pts) {
        return pointwise(apply_hecke(OpKind::S, m, apply_hecke(OpKind::T, d * m, F)), apply_hecke(OpKind::T, d, F),
                         1.0 / m, pts);
    });
    return out;
}

// ---------------------------------------------------------------- L^p

ReportRecord adjoint_check(int m, int trials, const QuadratureGrid& grid, Rng& rng, double tol) {
    Stopwatch sw;
    const QuadratureGrid g = grid_for(m, grid);
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const TwistedFn f = random_test_function(rng), h = random_test_function(rng);
        const cplx lhs = inner(apply_hecke(OpKind::T, m, f), h, g);
        const cplx rhs = inner(f, apply_hecke(OpKind::S, m, h), g);
        worst = worse(worst, std::abs(lhs - rhs));
    }
    std::ostringstream params;
    params << "m=" << m << " trials=" << trials << " panels=" << g.panels_per_axis;
    return make_record("adjoint.T_S", params.str(), worst, tol, sw.ms());
}

ReportRecord norm_identity_check(int m, int trials, const QuadratureGrid& grid, Rng& rng, double tol) {
    Stopwatch sw;
    const QuadratureGrid g = grid_for(m, grid);
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const TwistedFn f = random_test_function(rng);
        const double nf = lp_norm(f, 2.0, g);
        const double nt = lp_norm(apply_hecke(OpKind::T, m, f), 2.0, g);
        worst = worse(worst, std::abs(nt - nf / std::sqrt(double(m))));
        worst = worse(worst, std::abs(std::sqrt(double(m)) * nt - nf));
    }
    std::ostringstream params;
    params << "m=" << m << " trials=" << trials << " panels=" << g.panels_per_axis;
    return make_record("adjoint.norm_identity", params.str(), worst, tol, sw.ms());
}

ReportRecord r_isometry_check(double p, int trials, const QuadratureGrid& grid, Rng& rng, double tol) {
    Stopwatch sw;
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const TwistedFn f = random_test_function(rng);
        worst = worse(worst, std::abs(lp_norm(apply_R(f, 1), p, grid) - lp_norm(f, p, grid)));
    }
    std::ostringstream params;
    params << "p=" << p << " trials=" << trials;
    return make_record("adjoint.R_isometry", params.str(), worst, tol, sw.ms());
}

ReportRecord lp_bound_check(int m, double p, int trials, Rng& rng) {
    Stopwatch sw;
    // 100 x 100 nodes at least, which is also the sample for the sup norm.
    const QuadratureGrid g = grid_for(m, QuadratureGrid::tensor(5, 20));
    double max_ratio = 0.0;
    for (int t = 0; t < trials; ++t) {
        const TwistedFn f = random_test_function(rng);
        const double nf = norm_or_sup(f, p, g);
        for (OpKind kind : {OpKind::T, OpKind::S})
            max_ratio = worse(max_ratio, norm_or_sup(apply_hecke(kind, m, f), p, g) / nf);
    }
    std::ostringstream params;
    params << "m=" << m << " p=" << p << " trials=" << trials << " max_ratio=" << max_ratio;
    return make_record("adjoint.Lp_bound", params.str(), std::max(0.0, max_ratio - m), 0.0, sw.ms());
}

// ---------------------------------------------------------------- differential

std::vector<ReportRecord> commutator_checks(Rng& rng, int points, const StencilConfig& cfg, double tol) {
    const TwistedFn F = random_test_function(rng);
    const auto pts = sample_points(rng, points, 1, 0.05);
    std::vector<ReportRecord> out;
    const std::pair<OperatorSpec, OperatorSpec> pairs[] = {
        {OperatorSpec::plain(OpKind::D_plus), OperatorSpec::plain(OpKind::D_minus)},
        {OperatorSpec::plain(OpKind::D_plus), OperatorSpec::r_pow(1)},
        {OperatorSpec::plain(OpKind::D_minus), OperatorSpec::r_pow(1)},
        {OperatorSpec::plain(OpKind::D_L), OperatorSpec::r_pow(1)},
        {OperatorSpec::plain(OpKind::D_L), OperatorSpec::r_pow(2)},
    };
    for (const auto& [A, B] : pairs) {
        Stopwatch sw;
        ReportRecord r = commutator_residual(A, B, F, pts, cfg, tol);
        r.runtime_ms = sw.ms();
        out.push_back(std::move(r));
    }
    return out;
}

ReportRecord stencil_order_check(Rng& rng, StencilOrder order) {
    Stopwatch sw;
    const TwistedFn F = random_test_function(rng, 2);
    const auto pts = sample_points(rng, 5, 1, 0.3);
    // Steps large enough that truncation error dominates rounding.
    const double hs[] = {0.04, 0.02, 0.01, 0.005};
    double worst_dev = 0.0;
    double min_order = kInf;
    for (OpKind kind : {OpKind::D_plus, OpKind::D_minus, OpKind::D_L}) {
        for (const Point& q : pts) {
            cplx v[4];
            for (int i = 0; i < 4; ++i) v[i] = apply_D(kind, F, q.a, q.c, StencilConfig{hs[i], order});
            const double e1 = std::abs(v[0] - v[1]), e2 = std::abs(v[1] - v[2]), e3 = std::abs(v[2] - v[3]);
            const double p1 = std::log2(e1 / e2), p2 = std::log2(e2 / e3);
            const double nominal = order == StencilOrder::fourth ? 4.0 : 2.0;
            worst_dev = worse(worst_dev, std::max(std::abs(p1 - nominal), std::abs(p2 - nominal)));
            min_order = std::min({min_order, p1, p2});
        }
    }
    std::ostringstream params;
    params << "order=" << (order == StencilOrder::fourth ? 4 : 2) << " h=0.04..0.005 min_observed=" << min_order;
    return make_record("diff.stencil_order", params.str(), worst_dev, 0.5, sw.ms());
}

std::vector<ReportRecord> differential_eigen_checks(double s, Rng& rng, int points, double tol) {
    const auto pts = sample_points(rng, points, 1, 0.05);
    std::vector<ReportRecord> out;
    const std::string params = fmt(s) + " points=" + std::to_string(points);
    {
        Stopwatch sw;
        ReportRecord r = raising_lowering_scan(s, pts, {}, tol);
        r.runtime_ms = sw.ms();
        out.push_back(std::move(r));
    }
    Stopwatch sw;
    double dl = 0.0, delta = 0.0, forms = 0.0;
    for (Parity p : {Parity::plus, Parity::minus}) {
        const TwistedFn F = L_fn(s, p);
        dl = worse(dl, eigen_residual(OpKind::D_L, F, -s, pts));
        delta = worse(delta, eigen_residual(OpKind::Delta_L, F, -(s - 0.5), pts));
        for (const Point& q : pts) {
            const cplx f = F(q.a, q.c);
            forms = worse(forms, std::abs(apply_D(OpKind::Delta_L, F, q.a, q.c) - delta_L_symmetrized(F, q.a, q.c)) /
                                     (1.0 + std::abs(f)));
        }
    }
    const long ms = sw.ms();
    out.push_back(make_record("diff.D_L_eigen", params, dl, tol, ms));
    out.push_back(make_record("diff.Delta_L_eigen", params, delta, tol, ms));
    out.push_back(make_record("diff.Delta_L_forms", params, forms, tol, ms));
    return out;
}

// ---------------------------------------------------------------- eigenspace

ReportRecord gram_check(cplx s) {
    Stopwatch sw;
    const GramAnalysis g = gram_analysis(build_eigenspace(s));
    std::ostringstream params;
    params << fmt(s) << " rank=" << g.rank << " gap=" << g.gap;
    const double r = g.rank == 2 ? 1.0 / g.gap : kInf;
    return make_record("eigenspace.gram_rank", params.str(), r, 1e-6, sw.ms());
}

ReportRecord j_eigen_check(cplx s, Rng& rng, double tol) {
    Stopwatch sw;
    const auto [Fp, Fm] = j_split(build_eigenspace(s));
    const TwistedFn JFp = apply_R(Fp, 2), JFm = apply_R(Fm, 2);
    const auto pts = sample_points(rng, 20);
    const double worst = parallel_max(pts, [&](double a, double c) {
        return cplx(std::max(rel(JFp(a, c), Fp(a, c)), rel(JFm(a, c), -Fm(a, c))));
    });
    return make_record("eigenspace.J_eigen", fmt(s), worst, tol, sw.ms());
}

ReportRecord characterization_check(cplx s, double tol) {
    Stopwatch sw;
    double r = kInf;
    std::ostringstream params;
    params << fmt(s);
    try {
        const CharacterizationResult c = characterize(zeta_star_fn(s), s, CharPath::a_path);
        r = std::max({std::abs(c.A - 1.0), std::abs(c.B), c.residual});
        params << " A=" << c.A.real() << " B=" << std::abs(c.B);
    } catch (const Error& e) {
        params << " error=" << e.what();
    }
    return make_record("characterize.zeta_star", params.str(), r, tol, sw.ms());
}

ReportRecord counterexample_check(cplx s) {
    Stopwatch sw;
    const TwistedFn G = TwistedFn::plane([s](double, double c) { return std::exp(-s * std::log(std::abs(c))); }, 1,
                                         "c^-s");
    double r = 1.0;
    try {
        characterize(G, s, CharPath::a_path);
    } catch (const IdentityViolation&) {
        r = 0.0;
    }
    return make_record("characterize.rejects_untwisted", fmt(s), r, 0.0, sw.ms());
}

// ---------------------------------------------------------------- baselines

ReportRecord kubert_check(cplx s, Rng& rng, int m_max, int points, double tol) {
    Stopwatch sw;
    const cplx s1 = 1.0 - s;
    const LineFn f = [s1](double x) { return hurwitz(s1, x).value; };
    const LineFn g = [s1](double x) { return hurwitz(s1, 1.0 - x).value; };
    const LineFn plus = [f, g](double x) { return f(x) + g(x); };
    const LineFn minus = [f, g](double x) { return f(x) - g(x); };
    std::uniform_real_distribution<double> U(0.02, 0.98);
    std::vector<Point> pts;
    for (int i = 0; i < points; ++i) pts.push_back({U(rng), 0.0});
    double worst = 0.0;
    for (int m = 1; m <= m_max; ++m) {
        const cplx lambda = power(m, -s);
        worst = worse(worst, parallel_max(pts, [&](double x, double) {
                          double r = 0.0;
                          for (const LineFn* h : {&f, &g}) r = std::max(r, rel(kubert_1d(m, *h, x), lambda * (*h)(x)));
                          return cplx(r);
                      }));
    }
    // J0 f(x) = f(1-x) splits K_s into the two eigenlines.
    for (const Point& q : pts) {
        worst = worse(worst, rel(plus(1.0 - q.a), plus(q.a)));
        worst = worse(worst, rel(minus(1.0 - q.a), -minus(q.a)));
    }
    std::ostringstream params;
    params << fmt(s) << " m<=" << m_max << " points=" << points;
    return make_record("milnor.kubert_eigen", params.str(), worst, tol, sw.ms());
}

ReportRecord zeta_operator_check(double s, int M, Rng& rng, int points) {
    Stopwatch sw;
    if (!(s > 1.0) || M < 1) throw DomainError("zeta_operator_check: needs s > 1 and M >= 1");
    const TwistedFn F = zeta_star_fn(s);
    const cplx zeta_s = hurwitz(s, 1.0).value;
    // When m c lies within eps of an integer, the terms of T_m zeta* grow like
    // eps^{-s} and cancel over the k-sum, so rounding alone swamps the tail.
    // Points with such a near-resonance for some m <= M are redrawn.
    std::vector<Point> pts;
    while (int(pts.size()) < points) {
        const Point p = sample_points(rng, 1, 1, 0.05).front();
        bool resonant = false;
        for (int m = 2; m <= M && !resonant; ++m) resonant = detail::dist_to_integer(m * p.c) < 1e-3;
        if (!resonant) pts.push_back(p);
    }
    std::vector<cplx> diffs(pts.size()), vals(pts.size());
    kernels::evaluate_parallel(TwistedFn::plane([&](double a, double c) {
                                   return zeta_operator_partial(M, F, a, c) - zeta_s * F(a, c);
                               }),
                               pts, diffs);
    kernels::evaluate_parallel(F, pts, vals);
    double worst = 0.0, sup = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        worst = worse(worst, std::abs(diffs[i]));
        sup = std::max(sup, std::abs(vals[i]));
    }
    const double bound = sup * std::pow(double(M), 1.0 - s) / (s - 1.0);
    std::ostringstream params;
    params << fmt(s) << " M=" << M << " points=" << points;
    return make_record("zeta_operator.partial_sum", params.str(), worst, bound, sw.ms());
}

}  // namespace lerchlab
