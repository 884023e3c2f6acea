#include "lerchlab/diff_ops.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "lerchlab/errors.hpp"
#include "lerchlab/functions.hpp"

namespace lerchlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const cplx kTwoPiI{0.0, kTwoPi};

// First-derivative weights on offsets -2..2.
constexpr std::array<double, 5> kW4 = {1.0 / 12, -8.0 / 12, 0.0, 8.0 / 12, -1.0 / 12};
constexpr std::array<double, 5> kW2 = {0.0, -0.5, 0.0, 0.5, 0.0};

const std::array<double, 5>& weights(StencilOrder o) { return o == StencilOrder::fourth ? kW4 : kW2; }

void check_point(const TwistedFn& F, double a, double c, const StencilConfig& cfg) {
    const double margin = 2.0 * cfg.h;
    const int d = F.denominator();
    if (lattice_distance(a, d) <= margin || lattice_distance(c, d) <= margin)
        throw GridPointError("apply_D: stencil at (" + std::to_string(a) + ", " + std::to_string(c) +
                             ") reaches the discontinuity lattice");
    if (a + cfg.h == a || c + cfg.h == c) throw DomainError("apply_D: step underflows at this coordinate");
}

cplx d_da(const TwistedFn& F, double a, double c, double h, const std::array<double, 5>& w) {
    cplx sum{};
    for (int i = 0; i < 5; ++i)
        if (w[i] != 0.0) sum += w[i] * F.eval(a + (i - 2) * h, c);
    return sum / h;
}

cplx d_dc(const TwistedFn& F, double a, double c, double h, const std::array<double, 5>& w) {
    cplx sum{};
    for (int i = 0; i < 5; ++i)
        if (w[i] != 0.0) sum += w[i] * F.eval(a, c + (i - 2) * h);
    return sum / h;
}

// Second order: the 4-point cross stencil. Fourth order: tensor product of
// the 1-D fourth-order weights.
cplx d_dadc(const TwistedFn& F, double a, double c, double h, StencilOrder order) {
    if (order == StencilOrder::second) {
        return (F.eval(a + h, c + h) - F.eval(a + h, c - h) - F.eval(a - h, c + h) + F.eval(a - h, c - h)) /
               (4.0 * h * h);
    }
    cplx sum{};
    for (int i = 0; i < 5; ++i) {
        if (kW4[i] == 0.0) continue;
        for (int j = 0; j < 5; ++j) {
            if (kW4[j] == 0.0) continue;
            sum += kW4[i] * kW4[j] * F.eval(a + (i - 2) * h, c + (j - 2) * h);
        }
    }
    return sum / (h * h);
}

std::string fmt_s(cplx s) {
    std::ostringstream os;
    os << "s=" << s.real();
    if (s.imag() != 0.0) os << (s.imag() > 0 ? "+" : "") << s.imag() << "i";
    return os.str();
}

}  // namespace

void StencilConfig::validate() const {
    if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("StencilConfig: h must be positive");
    if (h < 1e-10) throw DomainError("StencilConfig: h below 1e-10 underflows the difference quotients");
}

cplx apply_D(OpKind kind, const TwistedFn& F, double a, double c, const StencilConfig& cfg) {
    cfg.validate();
    check_point(F, a, c, cfg);
    const auto& w = weights(cfg.order);
    const double h = cfg.h;
    switch (kind) {
        case OpKind::D_plus:
            return d_dc(F, a, c, h, w);
        case OpKind::D_minus:
            return d_da(F, a, c, h, w) / kTwoPiI + c * F.eval(a, c);
        case OpKind::D_L:
            return d_dadc(F, a, c, h, cfg.order) / kTwoPiI + c * d_dc(F, a, c, h, w);
        case OpKind::Delta_L:
            return d_dadc(F, a, c, h, cfg.order) / kTwoPiI + c * d_dc(F, a, c, h, w) + 0.5 * F.eval(a, c);
        default:
            throw DomainError(std::string("apply_D: ") + to_string(kind) + " is not a differential operator");
    }
}

TwistedFn apply_D(OpKind kind, const TwistedFn& F, const StencilConfig& cfg) {
    cfg.validate();
    if (!OperatorSpec{kind, 0}.is_differential())
        throw DomainError(std::string("apply_D: ") + to_string(kind) + " is not a differential operator");
    CoreFn fn = [kind, F, cfg](double a, double c) { return apply_D(kind, F, a, c, cfg); };
    std::string label = std::string(to_string(kind)) + "(" + F.label() + ")";
    return F.is_plane() ? TwistedFn::plane(std::move(fn), F.denominator(), std::move(label))
                        : TwistedFn(std::move(fn), F.denominator(), std::move(label));
}

cplx delta_L_symmetrized(const TwistedFn& F, double a, double c, const StencilConfig& cfg) {
    const TwistedFn Dp = apply_D(OpKind::D_plus, F, cfg);
    const TwistedFn Dm = apply_D(OpKind::D_minus, F, cfg);
    return 0.5 * (apply_D(OpKind::D_plus, Dm, a, c, cfg) + apply_D(OpKind::D_minus, Dp, a, c, cfg));
}

ReportRecord commutator_residual(const OperatorSpec& A, const OperatorSpec& B, const TwistedFn& F,
                                 std::span<const Point> points, const StencilConfig& cfg, double tolerance) {
    A.validate();
    B.validate();
    auto is = [](const OperatorSpec& x, OpKind k, int idx = 0) { return x.kind == k && x.index == idx; };
    auto is_r2 = [&](const OperatorSpec& x) { return is(x, OpKind::R_pow, 2) || is(x, OpKind::J); };
    auto D = [&](OpKind k, const TwistedFn& G) { return apply_D(k, G, cfg); };

    const TwistedFn RF = apply_R(F, 1);
    // Each relation is written as an expression that should vanish.
    std::function<cplx(double, double)> lhs;
    if (is(A, OpKind::D_plus) && is(B, OpKind::D_minus)) {
        const TwistedFn x = D(OpKind::D_plus, D(OpKind::D_minus, F)), y = D(OpKind::D_minus, D(OpKind::D_plus, F));
        lhs = [x, y, F](double a, double c) { return x.eval(a, c) - y.eval(a, c) - F.eval(a, c); };
    } else if (is(A, OpKind::D_minus) && is(B, OpKind::D_plus)) {
        const TwistedFn x = D(OpKind::D_minus, D(OpKind::D_plus, F)), y = D(OpKind::D_plus, D(OpKind::D_minus, F));
        lhs = [x, y, F](double a, double c) { return x.eval(a, c) - y.eval(a, c) + F.eval(a, c); };
    } else if (is(A, OpKind::D_plus) && is(B, OpKind::R_pow, 1)) {
        const TwistedFn x = D(OpKind::D_plus, RF), y = apply_R(D(OpKind::D_minus, F), 1);
        lhs = [x, y](double a, double c) { return x.eval(a, c) + kTwoPiI * y.eval(a, c); };
    } else if (is(A, OpKind::D_minus) && is(B, OpKind::R_pow, 1)) {
        const TwistedFn x = D(OpKind::D_minus, RF), y = apply_R(D(OpKind::D_plus, F), 1);
        lhs = [x, y](double a, double c) { return x.eval(a, c) - y.eval(a, c) / kTwoPiI; };
    } else if (is(A, OpKind::D_L) && is(B, OpKind::R_pow, 1)) {
        const TwistedFn x = D(OpKind::D_L, RF), y = apply_R(D(OpKind::D_L, F), 1);
        lhs = [x, y, RF](double a, double c) { return x.eval(a, c) + y.eval(a, c) + RF.eval(a, c); };
    } else if (is(A, OpKind::D_L) && is_r2(B)) {
        const TwistedFn x = D(OpKind::D_L, apply_R(F, 2)), y = apply_R(D(OpKind::D_L, F), 2);
        lhs = [x, y](double a, double c) { return x.eval(a, c) - y.eval(a, c); };
    } else {
        throw DomainError("commutator_residual: no relation is asserted for (" + A.name() + ", " + B.name() + ")");
    }

    double worst = 0.0;
    for (const Point& p : points) {
        // The outer stencil evaluates inner stencils 2h further out.
        const StencilConfig outer{2.0 * cfg.h, cfg.order};
        check_point(F, p.a, p.c, outer);
        const double r = std::abs(lhs(p.a, p.c)) / (1.0 + std::abs(F.eval(p.a, p.c)));
        worst = std::max(worst, std::isnan(r) ? INFINITY : r);
    }
    std::ostringstream params;
    params << "F=" << F.label() << " h=" << cfg.h << " order=" << (cfg.order == StencilOrder::fourth ? 4 : 2)
           << " points=" << points.size();
    return make_record("commutator." + A.name() + "," + B.name(), params.str(), worst, tolerance);
}

double eigen_residual(OpKind kind, const TwistedFn& F, cplx lambda, std::span<const Point> points,
                      const StencilConfig& cfg) {
    double worst = 0.0;
    for (const Point& p : points) {
        const cplx f = F(p.a, p.c);
        const double r = std::abs(apply_D(kind, F, p.a, p.c, cfg) - lambda * f) / (1.0 + std::abs(f));
        worst = std::max(worst, std::isnan(r) ? INFINITY : r);
    }
    return worst;
}

ReportRecord raising_lowering_scan(cplx s, std::span<const Point> samples, const StencilConfig& cfg,
                                   double tolerance) {
    for (Parity p : {Parity::plus, Parity::minus}) {
        if (L_vanishes(s, p) || L_vanishes(s - 1.0, p) || L_vanishes(s + 1.0, p))
            throw DegenerateError("raising_lowering_scan: a basis function vanishes at " + fmt_s(s));
    }
    double worst = 0.0;
    for (Parity p : {Parity::plus, Parity::minus}) {
        const TwistedFn F = L_fn(s, p);
        const TwistedFn lower = L_fn(s - 1.0, flip(p));
        const TwistedFn raise = L_fn(s + 1.0, flip(p));
        for (const Point& q : samples) {
            const cplx e1 = lower(q.a, q.c);
            const cplx e2 = -s * raise(q.a, q.c);
            const double r1 = std::abs(apply_D(OpKind::D_minus, F, q.a, q.c, cfg) - e1) / (1.0 + std::abs(e1));
            const double r2 = std::abs(apply_D(OpKind::D_plus, F, q.a, q.c, cfg) - e2) / (1.0 + std::abs(e2));
            worst = std::max({worst, std::isnan(r1) ? INFINITY : r1, std::isnan(r2) ? INFINITY : r2});
        }
    }
    std::ostringstream params;
    params << fmt_s(s) << " h=" << cfg.h << " points=" << samples.size();
    return make_record("raising_lowering", params.str(), worst, tolerance);
}

}  // namespace lerchlab
