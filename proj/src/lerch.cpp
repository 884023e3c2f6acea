#include "lerchlab/lerch.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <string>
#include <utility>

#include "lerchlab/em_sum.hpp"
#include "lerchlab/errors.hpp"

namespace lerchlab {

using detail::dist_to_integer;
using detail::expi2pi;

namespace {

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void check_finite(const LerchParams& p) {
    if (!finite(p.s) || !std::isfinite(p.a) || !std::isfinite(p.c))
        throw DomainError("non-finite Lerch parameters");
}

double rel_scale(cplx v) { return std::max(1.0, std::abs(v)); }

std::string describe(cplx s, double a, double c) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "(s=%.6g%+.6gi, a=%.6g, c=%.6g)", s.real(), s.imag(), a, c);
    return buf;
}

void require_converged(const detail::SeriesSum& r, const StrategyConfig& cfg, const char* what, cplx s, double a,
                       double c) {
    if (!(r.error <= cfg.target_tol * rel_scale(r.value))) {
        char buf[96];
        std::snprintf(buf, sizeof buf, ": error estimate %.3g above target after %ld terms at ", r.error, r.terms);
        throw ConvergenceError(std::string(what) + buf + describe(s, a, c));
    }
}

// Far left of the strip the Euler-Maclaurin head is a sum of huge terms
// that cancel. There Hurwitz's formula is used instead:
//   zeta(s,x) = Gamma(t)/(2 pi)^t (e^{-pi i t/2} P(x) + e^{pi i t/2} P(-x)),
// t = 1-s, P(y) = sum_{n>=1} e^{2 pi i n y} n^{-t}, for x in (0,1].
EvalResult hurwitz_reflected(cplx s, double x, const StrategyConfig& cfg) {
    long k = 0;
    while (x > 1.0 + LerchParams::integral_tol) {
        x -= 1.0;
        ++k;
    }
    const cplx t = 1.0 - s;
    auto periodic = [&](double y) {
        const auto r = detail::lerch_em(t, y, 1.0, cfg.max_terms);
        return std::pair{expi2pi(y) * r.value, r.error};
    };
    const auto [pp, ep] = periodic(x);
    const auto [pm, em] = periodic(-x);
    const cplx factor = complex_gamma(t).value * std::exp(-t * std::log(2.0 * std::numbers::pi));
    const cplx rot = std::exp(cplx(0.0, -0.5 * std::numbers::pi) * t);
    cplx value = factor * (rot * pp + pm / rot);
    double error = std::abs(factor) * (std::abs(rot) * ep + em / std::abs(rot)) + 4e-16 * std::abs(value);
    // zeta(s, x+k) = zeta(s, x) - sum_{m<k} (x+m)^{-s}.
    for (long m = 0; m < k; ++m) {
        const cplx term = std::exp(-s * std::log(x + double(m)));
        value -= term;
        error += 4e-16 * std::abs(term);
    }
    const detail::SeriesSum r{value, error, 0};
    require_converged(r, cfg, "hurwitz", s, 0.0, x + double(k));
    return {value, error, Strategy::reflected};
}

Strategy weaker(Strategy x, Strategy y) { return int(x) > int(y) ? x : y; }

// The strip evaluation without the near-integer guard; lerch_zeta routes
// here for every a that is not an exact integer.
EvalResult strip_unchecked(const LerchParams& p, const StrategyConfig& cfg) {
    const double ar = std::abs(detail::centered_fraction(p.a));
    if (ar >= 0.1 && std::abs(p.s.imag()) <= 40.0) {
        try {
            const auto r = detail::lerch_levin(p.s, p.a, p.c, cfg.max_terms);
            if (r.error <= cfg.target_tol * rel_scale(r.value)) return {r.value, r.error, Strategy::accelerated};
        } catch (const ConvergenceError&) {
        }
    }
    const auto r = detail::lerch_em(p.s, p.a, p.c, cfg.max_terms);
    require_converged(r, cfg, "eval_strip", p.s, p.a, p.c);
    return {r.value, r.error, Strategy::accelerated};
}

// L^{+-} on the open unit square.
EvalResult L_core(cplx s, double a, double c, Parity parity, const StrategyConfig& cfg);

EvalResult reflected_core(cplx s, double a, double c, Parity parity, const StrategyConfig& cfg) {
    const GammaValue g = tate_gamma(1.0 - s, parity);
    if (g.is_pole) throw DegenerateError("gamma factor pole in the functional equation");
    const EvalResult inner = L_core(1.0 - s, 1.0 - c, a, parity, cfg);
    const cplx factor = root_number(parity) * g.value * expi2pi(-a * c);
    const double mag = std::abs(factor);
    return {factor * inner.value, mag * inner.error_estimate + 1e-15 * mag * std::abs(inner.value), Strategy::reflected};
}

EvalResult L_core(cplx s, double a, double c, Parity parity, const StrategyConfig& cfg) {
    if (s.real() < cfg.sigma_lo) return reflected_core(s, a, c, parity, cfg);
    const EvalResult z1 = lerch_zeta({s, a, c}, cfg);
    const EvalResult z2 = lerch_zeta({s, 1.0 - a, 1.0 - c}, cfg);
    const cplx v = z1.value + parity_sign(parity) * expi2pi(-a) * z2.value;
    return {v, z1.error_estimate + z2.error_estimate, weaker(z1.strategy, z2.strategy)};
}

struct Reduced {
    double a;
    double c;
    cplx phase;
};

// Twisted-periodicity reduction to the open unit square. Only exact lattice
// points are refused: quadrature nodes graded toward a cell edge come within
// a few ulps of it and the values there are still well defined.
Reduced reduce_twisted(double a, double c) {
    if (a == std::floor(a) || c == std::floor(c))
        throw DegenerateError("L functions are not defined on integer a or c lines");
    const double a1 = a - std::floor(a);
    const double k = std::floor(c);
    return {a1, c - k, expi2pi(-std::fmod(k * a1, 1.0))};
}

}  // namespace

bool LerchParams::a_integral() const { return dist_to_integer(a) < integral_tol; }
bool LerchParams::c_integral() const { return dist_to_integer(c) < integral_tol; }

const char* to_string(Strategy s) {
    switch (s) {
        case Strategy::direct_series: return "direct_series";
        case Strategy::accelerated: return "accelerated";
        case Strategy::reflected: return "reflected";
    }
    return "?";
}

double StrategyConfig::default_target_tol() {
    if (const char* env = std::getenv("LERCHLAB_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0.0 && std::isfinite(v)) return v;
    }
    return 1e-10;
}

void StrategyConfig::validate() const {
    if (!(sigma_lo < sigma_hi)) throw ConfigError("StrategyConfig: sigma_lo must be below sigma_hi");
    if (max_terms < 64) throw ConfigError("StrategyConfig: max_terms must be at least 64");
    if (!(target_tol > 0.0)) throw ConfigError("StrategyConfig: target_tol must be positive");
}

EvalResult zeta_direct(const LerchParams& p, const StrategyConfig& cfg) {
    cfg.validate();
    check_finite(p);
    if (!(p.s.real() > 1.0)) throw DomainError("zeta_direct: requires Re s > 1");
    if (!(p.c > 0.0)) throw DomainError("zeta_direct: requires c > 0");
    const auto r = detail::lerch_em(p.s, p.a, p.c, cfg.max_terms);
    require_converged(r, cfg, "zeta_direct", p.s, p.a, p.c);
    return {r.value, r.error, Strategy::direct_series};
}

EvalResult eval_strip(const LerchParams& p, const StrategyConfig& cfg) {
    cfg.validate();
    check_finite(p);
    if (!(p.s.real() > cfg.sigma_lo)) throw DomainError("eval_strip: Re s below the reflection threshold");
    if (!(p.c > 0.0)) throw DomainError("eval_strip: requires c > 0");
    if (dist_to_integer(p.a) < 1e-6) throw DomainError("eval_strip: a within 1e-6 of an integer");
    return strip_unchecked(p, cfg);
}

EvalResult hurwitz(cplx s, double x, const StrategyConfig& cfg) {
    cfg.validate();
    if (!finite(s) || !std::isfinite(x)) throw DomainError("hurwitz: non-finite arguments");
    if (!(x > 0.0)) throw DomainError("hurwitz: requires x > 0");
    if (std::abs(s - 1.0) < 1e-13) throw DegenerateError("hurwitz: pole at s = 1");
    if (s.real() < cfg.sigma_lo && x <= 64.0) return hurwitz_reflected(s, x, cfg);
    const auto r = detail::lerch_em(s, 0.0, x, cfg.max_terms);
    require_converged(r, cfg, "hurwitz", s, 0.0, x);
    return {r.value, r.error, s.real() > 1.0 ? Strategy::direct_series : Strategy::accelerated};
}

EvalResult lerch_zeta(const LerchParams& p, const StrategyConfig& cfg) {
    cfg.validate();
    check_finite(p);
    if (!(p.c > 0.0)) throw DomainError("lerch_zeta: requires c > 0");
    if (p.a_integral()) return hurwitz(p.s, p.c, cfg);
    if (p.s.real() >= cfg.sigma_hi) return zeta_direct(p, cfg);
    if (p.s.real() >= cfg.sigma_lo) return strip_unchecked(p, cfg);

    // Reflected regime: bring c into (0, 1] and peel off the leading terms,
    // zeta(s,a,c+k) = e^{-2 pi i k a}(zeta(s,a,c) - sum_{m<k} e^{2 pi i m a}(m+c)^{-s}).
    long k = 0;
    double c = p.c;
    while (c > 1.0 + LerchParams::integral_tol) {
        c -= 1.0;
        ++k;
    }
    if (k > 64) {
        const auto r = detail::lerch_em(p.s, p.a, p.c, cfg.max_terms);
        require_converged(r, cfg, "lerch_zeta", p.s, p.a, p.c);
        return {r.value, r.error, Strategy::accelerated};
    }
    cplx peeled{};
    double peeled_abs = 0.0;
    for (long m = 0; m < k; ++m) {
        const cplx t = std::exp(-p.s * std::log(double(m) + c)) * expi2pi(p.a * double(m));
        peeled += t;
        peeled_abs += std::abs(t);
    }
    EvalResult base;
    if (dist_to_integer(c) < LerchParams::integral_tol) {
        const auto r = detail::lerch_em(p.s, p.a, c, cfg.max_terms);
        require_converged(r, cfg, "lerch_zeta", p.s, p.a, c);
        base = {r.value, r.error, Strategy::accelerated};
    } else {
        const double a1 = p.a - std::floor(p.a);
        const EvalResult lp = reflected_core(p.s, a1, c, Parity::plus, cfg);
        const EvalResult lm = reflected_core(p.s, a1, c, Parity::minus, cfg);
        base = {0.5 * (lp.value + lm.value), 0.5 * (lp.error_estimate + lm.error_estimate), Strategy::reflected};
    }
    if (k == 0) return base;
    const cplx phase = expi2pi(-std::fmod(double(k) * p.a, 1.0));
    return {phase * (base.value - peeled), base.error_estimate + 4e-16 * peeled_abs, base.strategy};
}

EvalResult lerch_star(const LerchParams& p, const StrategyConfig& cfg) {
    cfg.validate();
    check_finite(p);
    if (p.c_integral()) throw DomainError("lerch_star: c on an integer line");
    const double k = std::floor(p.c);
    const double c1 = p.c - k;
    const double a1 = p.a - std::floor(p.a);
    const EvalResult z = lerch_zeta({p.s, a1, c1}, cfg);
    const cplx phase = expi2pi(-std::fmod(k * a1, 1.0));
    return {phase * z.value, z.error_estimate, z.strategy};
}

EvalResult L_pm(const LerchParams& p, Parity parity, const StrategyConfig& cfg) {
    cfg.validate();
    check_finite(p);
    const Reduced r = reduce_twisted(p.a, p.c);
    const EvalResult v = L_core(p.s, r.a, r.c, parity, cfg);
    return {r.phase * v.value, v.error_estimate, v.strategy};
}

EvalResult eval_reflected(const LerchParams& p, Parity parity, const StrategyConfig& cfg) {
    cfg.validate();
    check_finite(p);
    if (!(p.s.real() < cfg.sigma_lo)) throw DomainError("eval_reflected: requires Re s < sigma_lo");
    const Reduced r = reduce_twisted(p.a, p.c);
    const EvalResult v = reflected_core(p.s, r.a, r.c, parity, cfg);
    return {r.phase * v.value, v.error_estimate, v.strategy};
}

EvalResult completed_L(const LerchParams& p, Parity parity, const StrategyConfig& cfg) {
    const GammaValue g = gamma_R(p.s, parity);
    if (g.is_pole) throw DegenerateError("completed_L: Gamma_R pole");
    const EvalResult v = L_pm(p, parity, cfg);
    const double mag = std::abs(g.value);
    return {g.value * v.value, mag * v.error_estimate, v.strategy};
}

bool L_vanishes(cplx s, Parity p) {
    if (std::abs(s.imag()) > 1e-12 || dist_to_integer(s.real()) > 1e-12) return false;
    const GammaValue g = tate_gamma(1.0 - cplx{std::round(s.real()), 0.0}, p);
    return !g.is_pole && g.value == cplx{};
}

bool R_vanishes(cplx s, Parity p) { return L_vanishes(1.0 - s, p); }

}  // namespace lerchlab
