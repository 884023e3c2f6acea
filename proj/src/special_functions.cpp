#include "lerchlab/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace lerchlab {

namespace {

constexpr double kPi = std::numbers::pi;

// Godfrey's coefficients for g = 607/128, n = 15.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,  .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,  .36899182659531622704e-5};

cplx lanczos_gamma(cplx z) {
    z -= 1.0;
    cplx sum = kLanczos[0];
    for (std::size_t k = 1; k < kLanczos.size(); ++k) sum += kLanczos[k] / (z + double(k));
    const cplx t = z + kLanczosG + 0.5;
    const double log_sqrt_2pi = 0.91893853320467274178;
    return std::exp(log_sqrt_2pi + (z + 0.5) * std::log(t) - t) * sum;
}

}  // namespace

const char* to_string(Parity p) { return p == Parity::plus ? "+" : "-"; }

double sin_pi(double x) {
    double r = std::fmod(x, 2.0);
    if (r < 0) r += 2.0;
    if (r == 0.0 || r == 1.0) return 0.0;
    if (r == 0.5) return 1.0;
    if (r == 1.5) return -1.0;
    return std::sin(kPi * r);
}

double cos_pi(double x) { return sin_pi(x + 0.5); }

cplx sin_pi(cplx z) {
    const double y = kPi * z.imag();
    return {sin_pi(z.real()) * std::cosh(y), cos_pi(z.real()) * std::sinh(y)};
}

bool near_nonpositive_integer(cplx z, double tol) {
    if (std::abs(z.imag()) > tol) return false;
    const double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) <= tol;
}

GammaValue complex_gamma(cplx z) {
    if (near_nonpositive_integer(z)) return {cplx{}, true};
    if (z.real() >= 0.5) return {lanczos_gamma(z), false};
    return {kPi / (sin_pi(z) * lanczos_gamma(1.0 - z)), false};
}

GammaValue gamma_R(cplx s, Parity p) {
    const cplx x = s + double(parity_epsilon(p));
    const GammaValue g = complex_gamma(0.5 * x);
    if (g.is_pole) return g;
    return {std::exp(-0.5 * x * std::log(kPi)) * g.value, false};
}

GammaValue tate_gamma(cplx s, Parity p) {
    const GammaValue num = gamma_R(s, p);
    if (num.is_pole) return num;
    const GammaValue den = gamma_R(1.0 - s, p);
    if (den.is_pole) return {cplx{}, false};
    return {num.value / den.value, false};
}

cplx root_number(Parity p) { return p == Parity::plus ? cplx{1.0, 0.0} : cplx{0.0, 1.0}; }

}  // namespace lerchlab
