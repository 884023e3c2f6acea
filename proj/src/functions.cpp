#include "lerchlab/functions.hpp"

#include <cmath>
#include <sstream>

#include "lerchlab/em_sum.hpp"
#include "lerchlab/errors.hpp"

namespace lerchlab {

namespace {

std::string fmt(cplx s) {
    std::ostringstream os;
    os << s.real();
    if (s.imag() != 0.0) os << (s.imag() > 0 ? "+" : "") << s.imag() << "i";
    return os.str();
}

}  // namespace

TwistedFn zeta_star_fn(cplx s, const StrategyConfig& cfg) {
    return TwistedFn([s, cfg](double a, double c) { return lerch_zeta({s, a, c}, cfg).value; }, 1,
                     "zeta*(" + fmt(s) + ")");
}

TwistedFn L_fn(cplx s, Parity p, const StrategyConfig& cfg) {
    return TwistedFn([s, p, cfg](double a, double c) { return L_pm({s, a, c}, p, cfg).value; }, 1,
                     std::string("L") + to_string(p) + "(" + fmt(s) + ")");
}

TwistedFn R_fn(cplx s, Parity p, const StrategyConfig& cfg) {
    return TwistedFn(
        [s, p, cfg](double a, double c) {
            return detail::expi2pi(-a * c) * L_pm({1.0 - s, 1.0 - c, a}, p, cfg).value;
        },
        1, std::string("R") + to_string(p) + "(" + fmt(s) + ")");
}

TwistedFn L_hat_fn(cplx s, Parity p, const StrategyConfig& cfg) {
    const GammaValue g = gamma_R(s, p);
    if (g.is_pole) throw DegenerateError("L_hat_fn: Gamma_R pole at s = " + fmt(s));
    const cplx k = g.value;
    return TwistedFn([s, p, cfg, k](double a, double c) { return k * L_pm({s, a, c}, p, cfg).value; }, 1,
                     std::string("Lhat") + to_string(p) + "(" + fmt(s) + ")");
}

}  // namespace lerchlab
