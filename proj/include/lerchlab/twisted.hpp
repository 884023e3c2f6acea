#pragma once

#include <functional>
#include <memory>
#include <string>

#include "lerchlab/special_functions.hpp"

namespace lerchlab {

using CoreFn = std::function<cplx(double a, double c)>;
using LineFn = std::function<cplx(double x)>;

struct Point {
    double a;
    double c;
};

/// A function on the plane determined by its values on the open unit square
/// through F(a+1,c) = F(a,c) and F(a,c+1) = e^{-2 pi i a} F(a,c).
///
/// Discontinuities may only sit on the lattice lines a, c in (1/d)Z. A "plane"
/// function is an escape hatch for counterexamples: its evaluator is called
/// on the raw coordinates and no periodicity is imposed.
class TwistedFn {
public:
    TwistedFn() = default;
    TwistedFn(CoreFn core, int denominator = 1, std::string label = "");

    static TwistedFn plane(CoreFn fn, int denominator = 1, std::string label = "");

    /// Checked evaluation (grid tolerance 1e-13), same as extend().
    cplx operator()(double a, double c) const;

    /// Evaluation without the lattice check, used by operators and quadrature
    /// whose nodes are known to be admissible.
    cplx eval(double a, double c) const;

    cplx core(double a, double c) const { return (*core_)(a, c); }

    int denominator() const { return d_; }
    const std::string& label() const { return label_; }
    bool is_plane() const { return plane_; }
    explicit operator bool() const { return static_cast<bool>(core_); }

private:
    std::shared_ptr<const CoreFn> core_;
    int d_ = 1;
    std::string label_;
    bool plane_ = false;
};

/// Twisted extension: with a' = a - floor(a), k = floor(c), c' = c - k the
/// value is e^{-2 pi i k a'} core(a', c'). The a-rule is applied first, then
/// the k-fold c-rule. Throws GridPointError within grid_tol of the lattice.
cplx extend(const TwistedFn& F, double a, double c, double grid_tol = 1e-13);

/// Distance from x to (1/d)Z.
double lattice_distance(double x, int d);

enum class OpKind { T, S, T_vee, S_vee, R_pow, J, D_plus, D_minus, D_L, Delta_L };

const char* to_string(OpKind k);

struct OperatorSpec {
    OpKind kind = OpKind::T;
    int index = 0;  // m for the Hecke kinds, k in 0..3 for R_pow, 0 otherwise

    static OperatorSpec hecke(OpKind kind, int m);
    static OperatorSpec r_pow(int k);
    static OperatorSpec plain(OpKind kind);

    bool is_hecke() const;
    bool is_differential() const;
    /// Throws DomainError when the index does not fit the kind.
    void validate() const;
    std::string name() const;
};

/// T_m, S_m, T_m^vee or S_m^vee applied lazily; denominator becomes m*d.
TwistedFn apply_hecke(OpKind kind, int m, const TwistedFn& F);
TwistedFn apply_hecke(const OperatorSpec& spec, const TwistedFn& F);

/// R^power, power in 0..3.
TwistedFn apply_R(const TwistedFn& F, int power);

/// Any non-differential operator spec (Hecke kinds, R_pow, J).
TwistedFn apply_operator(const OperatorSpec& spec, const TwistedFn& F);

/// Lazily scaled/combined functions, handy for building identities.
TwistedFn scale(cplx k, const TwistedFn& F);
TwistedFn linear_combination(cplx x, const TwistedFn& F, cplx y, const TwistedFn& G);

/// (1/m) sum_{k<m} f((x+k)/m), x in (0,1).
cplx kubert_1d(int m, const LineFn& f, double x);

/// f(m c).
cplx dilation_1d(int m, const LineFn& f, double c);

/// sum_{m=1}^{M} (T_m F)(a, c).
cplx zeta_operator_partial(int M, const TwistedFn& F, double a, double c);

}  // namespace lerchlab
