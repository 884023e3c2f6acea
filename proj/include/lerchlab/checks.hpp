#pragma once

// Identity checks over sampled points and quadrature grids. Every check
// returns ReportRecords; none of them throws on a failed identity, only on
// malformed input.

#include <random>
#include <vector>

#include "lerchlab/diff_ops.hpp"
#include "lerchlab/quadrature.hpp"
#include "lerchlab/report.hpp"
#include "lerchlab/twisted.hpp"

namespace lerchlab {

using Rng = std::mt19937_64;

/// Smooth twisted-periodic test function: a random trigonometric polynomial
/// of the given degree in a times sin^4(pi c)(b0 + b1 cos 2 pi c + b2 sin 2 pi c).
/// The sin^4 factor makes the twisted extension C^3 across the c lines.
TwistedFn random_test_function(Rng& rng, int degree = 3);

/// n points of the open unit square keeping margin/d away from (1/d)Z.
std::vector<Point> sample_points(Rng& rng, int n, int d = 1, double margin = 0.02);

// Gamma factors and evaluation strategies.
ReportRecord gamma_reflection_check(Rng& rng, int samples = 200, double tol = 1e-10);
ReportRecord gamma_recurrence_check(Rng& rng, int samples = 200, double tol = 1e-11);
ReportRecord strategy_agreement_check(Rng& rng, int samples = 100, double tol = 1e-9);
ReportRecord twisted_periodicity_check(Rng& rng, int samples = 50, double tol = 1e-10);

/// Completed functional equations for both parities at random s, half of
/// them on Re s = 1/2. The residual is measured relative to |Gamma_R(s)|(1+|L|)
/// so that the exponential decay of the gamma factor in |Im s| does not
/// make the test vacuous.
ReportRecord functional_equation_check(Rng& rng, int samples = 100, double tol = 1e-7);

/// R L_s = w^{-1} gamma(1-s) L_{1-s} for both parities.
ReportRecord r_action_check(cplx s, Rng& rng, int points = 20, double tol = 1e-8);

/// |T_m F - m^{-s} F| / (1 + |F|) for both active basis functions of E_s,
/// 2 <= m <= m_max, points kept 0.02/m away from the 1/m lattice.
ReportRecord hecke_eigen_check(cplx s, Rng& rng, int m_max = 16, int points = 50, double tol = 1e-8);

/// All four families on E_s: T and T_vee with m^{-s}, S and S_vee with m^{s-1}.
ReportRecord hecke_family_check(cplx s, Rng& rng, int m_max = 6, int points = 10, double tol = 1e-8);

/// T_m T_n = T_mn, S_m T_m = I/m, T_vee = T, S_vee = S, S_m T_l = T_l S_m and
/// S_m T_dm = T_d / m on random test functions.
std::vector<ReportRecord> operator_algebra_checks(Rng& rng, int m_max = 6, int points = 20, double tol = 1e-11);

/// |<T_m f, g> - <f, S_m g>| over random pairs.
ReportRecord adjoint_check(int m, int trials, const QuadratureGrid& grid, Rng& rng, double tol = 1e-7);

/// |‖T_m f‖_2 - m^{-1/2}‖f‖_2| over random f.
ReportRecord norm_identity_check(int m, int trials, const QuadratureGrid& grid, Rng& rng, double tol = 1e-8);

/// |‖R f‖_p - ‖f‖_p| over random f.
ReportRecord r_isometry_check(double p, int trials, const QuadratureGrid& grid, Rng& rng, double tol = 1e-9);

/// ‖T_m f‖_p <= m‖f‖_p and the same for S_m. The residual is the worst
/// excess of ‖.‖_p / ‖f‖_p over m (zero when the bound holds); the largest
/// observed ratio is echoed in params. p may be infinity (sampled sup).
ReportRecord lp_bound_check(int m, double p, int trials, Rng& rng);

/// The five commutation relations on a random test function.
std::vector<ReportRecord> commutator_checks(Rng& rng, int points = 20, const StencilConfig& cfg = {},
                                            double tol = 1e-5);

/// Observed order of the central differences from successive h-halvings,
/// compared against the nominal order with tolerance 0.5.
ReportRecord stencil_order_check(Rng& rng, StencilOrder order = StencilOrder::fourth);

/// Raising/lowering, D_L and Delta_L eigenvalues, and the two forms of Delta_L.
std::vector<ReportRecord> differential_eigen_checks(double s, Rng& rng, int points = 20, double tol = 1e-5);

/// Numerical rank 2 with gap above 1e6. Residual is 1/gap, or infinity when
/// the rank is not 2.
ReportRecord gram_check(cplx s);

/// J F = +-F on the J-eigenbasis at 20 points.
ReportRecord j_eigen_check(cplx s, Rng& rng, double tol = 1e-10);

/// characterize(zeta*(s)) must give (A,B) = (1,0); residual is the worst of
/// |A-1|, |B| and the reconstruction residual.
ReportRecord characterization_check(cplx s, double tol = 1e-6);

/// The untwisted function c^{-s} must be rejected by characterize.
ReportRecord counterexample_check(cplx s);

/// Kubert eigenfunctions zeta_{1-s}(x) and zeta_{1-s}(1-x), 2 <= m <= m_max,
/// plus the J0 splitting f(x) +- f(1-x).
ReportRecord kubert_check(cplx s, Rng& rng, int m_max = 12, int points = 10, double tol = 1e-9);

/// |sum_{m<=M} T_m zeta_s - zeta(s) zeta_s| against the tail bound
/// sup|zeta_s| / ((Re s - 1) M^{Re s - 1}) at random points. Points where
/// some m c with m <= M falls within 1e-3 of an integer are skipped.
ReportRecord zeta_operator_check(double s, int M, Rng& rng, int points = 10);

}  // namespace lerchlab
