#pragma once

#include "lerchlab/special_functions.hpp"

namespace lerchlab {

/// The triple (s, a, c). The integrality flags are derived from the stored
/// values on every call, so they cannot drift out of sync.
struct LerchParams {
    cplx s;
    double a = 0.0;
    double c = 1.0;

    static constexpr double integral_tol = 1e-14;
    bool a_integral() const;
    bool c_integral() const;
};

enum class Strategy { direct_series, accelerated, reflected };

const char* to_string(Strategy s);

struct EvalResult {
    cplx value;
    double error_estimate = 0.0;
    Strategy strategy = Strategy::direct_series;
};

// target_tol is relative to max(1, |value|): the series values near c -> 0
// grow like c^{-s}, so an absolute bound would be meaningless there.
struct StrategyConfig {
    double sigma_hi = 1.5;
    double sigma_lo = -0.5;
    int max_terms = 1 << 20;
    double target_tol = default_target_tol();

    void validate() const;

    /// 1e-10 unless LERCHLAB_TOL holds a positive number.
    static double default_target_tol();
};

/// zeta(s,a,c) = sum_{n>=0} e^{2 pi i n a} (n+c)^{-s} for Re s > 1, c > 0.
EvalResult zeta_direct(const LerchParams& p, const StrategyConfig& cfg = {});

/// Conditionally convergent range Re s > sigma_lo (the series proper needs
/// Re s > 0; below that the same transform yields the continuation).
EvalResult eval_strip(const LerchParams& p, const StrategyConfig& cfg = {});

/// zeta(s,a,c) for every s != 1 (or every s when a is not an integer), c > 0.
/// Chooses direct summation, acceleration or reflection from Re s.
EvalResult lerch_zeta(const LerchParams& p, const StrategyConfig& cfg = {});

/// zeta*(s,a,c) = sum_{n+c>0} e^{2 pi i n a}|n+c|^{-s}, any real a and any c
/// off the integers.
EvalResult lerch_star(const LerchParams& p, const StrategyConfig& cfg = {});

/// L^{+-}(s,a,c) = zeta(s,a,c) +- e^{-2 pi i a} zeta(s,1-a,1-c), extended
/// from the open unit square by twisted periodicity.
EvalResult L_pm(const LerchParams& p, Parity parity, const StrategyConfig& cfg = {});

/// L^{+-} through the functional equation from 1-s. Requires Re s < sigma_lo
/// and (a,c) in the open unit square.
EvalResult eval_reflected(const LerchParams& p, Parity parity, const StrategyConfig& cfg = {});

/// Gamma_R^{+-}(s) L^{+-}(s,a,c).
EvalResult completed_L(const LerchParams& p, Parity parity, const StrategyConfig& cfg = {});

/// Hurwitz zeta(s, x) = zeta(s, 0, x), x > 0, s != 1.
EvalResult hurwitz(cplx s, double x, const StrategyConfig& cfg = {});

/// True when L_s^p vanishes identically (integer s where gamma^p(1-s) = 0).
bool L_vanishes(cplx s, Parity p);

/// True when R_s^p = e^{-2 pi i a c} L^p(1-s, 1-c, a) vanishes identically.
bool R_vanishes(cplx s, Parity p);

}  // namespace lerchlab
