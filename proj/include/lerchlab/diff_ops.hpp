#pragma once

#include <span>

#include "lerchlab/report.hpp"
#include "lerchlab/twisted.hpp"

namespace lerchlab {

enum class StencilOrder { second, fourth };

struct StencilConfig {
    double h = 1e-4;
    StencilOrder order = StencilOrder::fourth;

    /// Throws DomainError for h <= 0 or h below 1e-10.
    void validate() const;
};

/// D+ = d/dc, D- = (1/2 pi i) d/da + c, D_L = D- D+, Delta_L = D_L + 1/2,
/// all by central differences. kind must be one of the four differential
/// kinds. (a,c) has to stay more than 2h away from F's lattice.
cplx apply_D(OpKind kind, const TwistedFn& F, double a, double c, const StencilConfig& cfg = {});

/// The same operator as a lazily evaluated function, so it can be composed.
TwistedFn apply_D(OpKind kind, const TwistedFn& F, const StencilConfig& cfg = {});

/// Delta_L written as the symmetrized product (D+ D- + D- D+)/2.
cplx delta_L_symmetrized(const TwistedFn& F, double a, double c, const StencilConfig& cfg = {});

/// Max over points of |(AB - BA - expected) F| / (1 + |F|) for the relations
///   [D+, D-] = I,  D+ R = -2 pi i R D-,  D- R = (1/2 pi i) R D+,
///   D_L R + R D_L = -R,  D_L R^2 = R^2 D_L  (J may stand for R^2).
/// Any other pair throws DomainError.
ReportRecord commutator_residual(const OperatorSpec& A, const OperatorSpec& B, const TwistedFn& F,
                                 std::span<const Point> points, const StencilConfig& cfg = {},
                                 double tolerance = 1e-5);

/// D- L_s^{+-} = L_{s-1}^{-+} and D+ L_s^{+-} = -s L_{s+1}^{-+} on both
/// parities; residuals relative to 1 + |expected|.
ReportRecord raising_lowering_scan(cplx s, std::span<const Point> samples, const StencilConfig& cfg = {},
                                   double tolerance = 1e-5);

/// Max of |op F - lambda F| / (1 + |F|).
double eigen_residual(OpKind kind, const TwistedFn& F, cplx lambda, std::span<const Point> points,
                      const StencilConfig& cfg = {});

}  // namespace lerchlab
