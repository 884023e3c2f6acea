#pragma once

// The Lerch-type functions packaged as twisted-periodic evaluators.

#include "lerchlab/lerch.hpp"
#include "lerchlab/twisted.hpp"

namespace lerchlab {

/// zeta*(s,.,.): zeta(s,a,c) on the unit square, twisted elsewhere.
TwistedFn zeta_star_fn(cplx s, const StrategyConfig& cfg = {});

/// L_s^p(a,c).
TwistedFn L_fn(cplx s, Parity p, const StrategyConfig& cfg = {});

/// R_s^p(a,c) = e^{-2 pi i a c} L^p(1-s, 1-c, a).
TwistedFn R_fn(cplx s, Parity p, const StrategyConfig& cfg = {});

/// Gamma_R^p(s) L_s^p.
TwistedFn L_hat_fn(cplx s, Parity p, const StrategyConfig& cfg = {});

}  // namespace lerchlab
