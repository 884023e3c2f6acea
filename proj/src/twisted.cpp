#include "lerchlab/twisted.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "lerchlab/em_sum.hpp"
#include "lerchlab/errors.hpp"

namespace lerchlab {

using detail::expi2pi;

TwistedFn::TwistedFn(CoreFn core, int denominator, std::string label)
    : core_(std::make_shared<const CoreFn>(std::move(core))), d_(denominator), label_(std::move(label)) {
    if (d_ < 1) throw DomainError("TwistedFn: denominator must be positive");
}

TwistedFn TwistedFn::plane(CoreFn fn, int denominator, std::string label) {
    TwistedFn f(std::move(fn), denominator, std::move(label));
    f.plane_ = true;
    return f;
}

cplx TwistedFn::operator()(double a, double c) const { return extend(*this, a, c); }

cplx TwistedFn::eval(double a, double c) const {
    if (plane_) return (*core_)(a, c);
    const double a1 = a - std::floor(a);
    const double k = std::floor(c);
    const double c1 = c - k;
    if (k == 0.0) return (*core_)(a1, c1);
    return expi2pi(-std::fmod(k * a1, 1.0)) * (*core_)(a1, c1);
}

double lattice_distance(double x, int d) {
    const double y = x * d;
    return std::abs(y - std::round(y)) / d;
}

cplx extend(const TwistedFn& F, double a, double c, double grid_tol) {
    if (!F) throw DomainError("extend: empty function");
    const int d = F.denominator();
    if (lattice_distance(a, d) < grid_tol || lattice_distance(c, d) < grid_tol)
        throw GridPointError("extend: (" + std::to_string(a) + ", " + std::to_string(c) +
                             ") lies on the discontinuity lattice of " + F.label());
    return F.eval(a, c);
}

const char* to_string(OpKind k) {
    switch (k) {
        case OpKind::T: return "T";
        case OpKind::S: return "S";
        case OpKind::T_vee: return "T_vee";
        case OpKind::S_vee: return "S_vee";
        case OpKind::R_pow: return "R";
        case OpKind::J: return "J";
        case OpKind::D_plus: return "D_plus";
        case OpKind::D_minus: return "D_minus";
        case OpKind::D_L: return "D_L";
        case OpKind::Delta_L: return "Delta_L";
    }
    return "?";
}

OperatorSpec OperatorSpec::hecke(OpKind kind, int m) {
    OperatorSpec s{kind, m};
    if (!s.is_hecke()) throw DomainError(std::string("OperatorSpec::hecke: ") + to_string(kind) + " is not a Hecke kind");
    s.validate();
    return s;
}

OperatorSpec OperatorSpec::r_pow(int k) {
    OperatorSpec s{OpKind::R_pow, k};
    s.validate();
    return s;
}

OperatorSpec OperatorSpec::plain(OpKind kind) {
    OperatorSpec s{kind, 0};
    s.validate();
    return s;
}

bool OperatorSpec::is_hecke() const {
    return kind == OpKind::T || kind == OpKind::S || kind == OpKind::T_vee || kind == OpKind::S_vee;
}

bool OperatorSpec::is_differential() const {
    return kind == OpKind::D_plus || kind == OpKind::D_minus || kind == OpKind::D_L || kind == OpKind::Delta_L;
}

void OperatorSpec::validate() const {
    if (is_hecke()) {
        if (index < 1) throw DomainError(std::string("OperatorSpec: ") + to_string(kind) + " needs m >= 1");
    } else if (kind == OpKind::R_pow) {
        if (index < 0 || index > 3) throw DomainError("OperatorSpec: R power must be in 0..3");
    } else if (index != 0) {
        throw DomainError(std::string("OperatorSpec: ") + to_string(kind) + " takes no index");
    }
}

std::string OperatorSpec::name() const {
    if (is_hecke()) return std::string(to_string(kind)) + "_" + std::to_string(index);
    if (kind == OpKind::R_pow) return "R^" + std::to_string(index);
    return to_string(kind);
}

namespace {

TwistedFn rebuild(const TwistedFn& like, CoreFn fn, int d, std::string label) {
    return like.is_plane() ? TwistedFn::plane(std::move(fn), d, std::move(label))
                           : TwistedFn(std::move(fn), d, std::move(label));
}

}  // namespace

TwistedFn apply_hecke(OpKind kind, int m, const TwistedFn& F) {
    const OperatorSpec spec = OperatorSpec::hecke(kind, m);
    const double inv = 1.0 / m;
    const std::string label = spec.name() + "(" + F.label() + ")";
    CoreFn fn;
    switch (kind) {
        case OpKind::T:
            fn = [F, m, inv](double a, double c) {
                cplx sum{};
                for (int k = 0; k < m; ++k) sum += F.eval((a + k) * inv, m * c);
                return sum * inv;
            };
            break;
        case OpKind::S:
            fn = [F, m, inv](double a, double c) {
                cplx sum{};
                for (int k = 0; k < m; ++k) sum += expi2pi(std::fmod(k * a, 1.0)) * F.eval(m * a, (c + k) * inv);
                return sum * inv;
            };
            break;
        case OpKind::T_vee:
            fn = [F, m, inv](double a, double c) {
                cplx sum{};
                for (int k = 0; k < m; ++k)
                    sum += expi2pi(((1 - m) * a + k) * inv) * F.eval((a + k) * inv, 1.0 + m * (c - 1.0));
                return sum * inv;
            };
            break;
        case OpKind::S_vee:
            fn = [F, m, inv](double a, double c) {
                cplx sum{};
                for (int k = 0; k < m; ++k)
                    sum += expi2pi(std::fmod((m - (k + 1)) * a, 1.0)) *
                           F.eval(1.0 + m * (a - 1.0), (c + m - (k + 1)) * inv);
                return sum * inv;
            };
            break;
        default:
            throw DomainError("apply_hecke: not a Hecke kind");
    }
    return rebuild(F, std::move(fn), m * F.denominator(), label);
}

TwistedFn apply_hecke(const OperatorSpec& spec, const TwistedFn& F) { return apply_hecke(spec.kind, spec.index, F); }

TwistedFn apply_R(const TwistedFn& F, int power) {
    if (power < 0 || power > 3) throw DomainError("apply_R: power must be in 0..3");
    if (power == 0) return F;
    const std::string label = "R^" + std::to_string(power) + "(" + F.label() + ")";
    CoreFn fn;
    switch (power) {
        case 1:
            fn = [F](double a, double c) { return expi2pi(-std::fmod(a * c, 1.0)) * F.eval(1.0 - c, a); };
            break;
        case 2:
            fn = [F](double a, double c) { return expi2pi(-std::fmod(a, 1.0)) * F.eval(1.0 - a, 1.0 - c); };
            break;
        default:
            fn = [F](double a, double c) { return expi2pi(std::fmod(c - a * c, 1.0)) * F.eval(c, 1.0 - a); };
            break;
    }
    return rebuild(F, std::move(fn), F.denominator(), label);
}

TwistedFn apply_operator(const OperatorSpec& spec, const TwistedFn& F) {
    spec.validate();
    if (spec.is_hecke()) return apply_hecke(spec, F);
    if (spec.kind == OpKind::R_pow) return apply_R(F, spec.index);
    if (spec.kind == OpKind::J) return apply_R(F, 2);
    throw DomainError("apply_operator: differential operators live in diff_ops");
}

TwistedFn scale(cplx k, const TwistedFn& F) {
    return rebuild(F, [F, k](double a, double c) { return k * F.eval(a, c); }, F.denominator(), F.label());
}

TwistedFn linear_combination(cplx x, const TwistedFn& F, cplx y, const TwistedFn& G) {
    const int d = std::lcm(F.denominator(), G.denominator());
    return rebuild(F, [F, G, x, y](double a, double c) { return x * F.eval(a, c) + y * G.eval(a, c); }, d,
                   F.label() + "+" + G.label());
}

cplx kubert_1d(int m, const LineFn& f, double x) {
    if (m < 1) throw DomainError("kubert_1d: m must be positive");
    if (!(x > 0.0 && x < 1.0)) throw DomainError("kubert_1d: x must lie in (0,1)");
    cplx sum{};
    for (int k = 0; k < m; ++k) sum += f((x + k) / m);
    return sum / double(m);
}

cplx dilation_1d(int m, const LineFn& f, double c) {
    if (m < 1) throw DomainError("dilation_1d: m must be positive");
    return f(m * c);
}

cplx zeta_operator_partial(int M, const TwistedFn& F, double a, double c) {
    if (M < 1) throw DomainError("zeta_operator_partial: M must be positive");
    cplx sum{};
    for (int m = 1; m <= M; ++m) sum += extend(apply_hecke(OpKind::T, m, F), a, c);
    return sum;
}

}  // namespace lerchlab
