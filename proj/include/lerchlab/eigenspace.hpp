#pragma once

#include <array>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "lerchlab/functions.hpp"
#include "lerchlab/twisted.hpp"

namespace lerchlab {

enum class BasisMember { L_plus = 0, L_minus = 1, R_plus = 2, R_minus = 3 };

const char* to_string(BasisMember m);

struct EigenBasis {
    cplx s;
    std::array<TwistedFn, 4> span;   // indexed by BasisMember
    std::array<bool, 4> vanishes{};  // identically zero at this (integer) s
    std::pair<BasisMember, BasisMember> active_pair{BasisMember::L_plus, BasisMember::L_minus};

    const TwistedFn& operator[](BasisMember m) const { return span[std::size_t(m)]; }
    const TwistedFn& active_first() const { return (*this)[active_pair.first]; }
    const TwistedFn& active_second() const { return (*this)[active_pair.second]; }
};

/// L_s^{+-} and R_s^{+-}. The active pair is (L+, L-) for Re s > 0 and
/// (R+, R-) otherwise; at integer s the vanishing members are flagged.
EigenBasis build_eigenspace(cplx s, const StrategyConfig& cfg = {});

/// (F+, F-) with J F^{+-} = +-F^{+-}, checked at sample points.
std::pair<TwistedFn, TwistedFn> j_split(const EigenBasis& basis);

enum class Axis { a_axis, c_axis };

struct FourierSlice {
    Axis axis = Axis::a_axis;
    double fixed_coord = 0.0;
    int n_min = 0;
    int n_max = -1;
    std::map<int, cplx> coefficients;
    bool decaying = true;  // false when the tail does not shrink (non-integrable warning)

    cplx at(int n) const;
};

/// a-axis: f_n(c) = int_0^1 F(a,c) e^{-2 pi i n a} da.
/// c-axis: g_n(a) = int_0^1 e^{2 pi i a c} F(a,c) e^{-2 pi i n c} dc.
/// n runs over [-N, N]. Composite 64-point Gauss-Legendre, split at the
/// multiples of 1/d and graded geometrically toward each split point.
FourierSlice fourier_slice(const TwistedFn& F, Axis axis, double fixed_coord, int N);

enum class CharPath { a_path, c_path };

struct CharacterizationResult {
    cplx A;
    cplx B;
    double residual = 0.0;        // max |F - H| over the test points
    double spread = 0.0;          // worst deviation of the normalized coefficients from A or B
    double hecke_residual = 0.0;  // worst coefficient Hecke-identity mismatch
    TwistedFn matched;            // the reconstruction H
};

/// Recover (A, B) from the Fourier coefficients of a candidate eigenfunction
/// and rebuild it from the eigenspace basis. Throws IdentityViolation when F
/// is not twisted-periodic, its normalized coefficients are not piecewise
/// constant, or they break the Hecke coefficient identity.
CharacterizationResult characterize(const TwistedFn& F, cplx s, CharPath path, int N = 32,
                                    double tolerance = 1e-6);

struct GramAnalysis {
    std::array<double, 4> singular_values{};  // descending
    int rank = 0;
    double gap = 0.0;  // sigma_2 / sigma_3
};

/// Normalized Gram matrix of the four spanning functions sampled on a
/// grid x grid interior lattice.
GramAnalysis gram_analysis(const EigenBasis& basis, int grid = 8);

}  // namespace lerchlab
