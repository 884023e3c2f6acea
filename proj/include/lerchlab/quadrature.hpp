#pragma once

#include <span>
#include <vector>

#include "lerchlab/twisted.hpp"

namespace lerchlab {

/// Gauss-Legendre rule mapped to [0,1]; weights sum to 1.
struct GaussRule {
    std::vector<double> x;
    std::vector<double> w;
};

/// Cached per order; safe to call from several threads.
const GaussRule& gauss_legendre(int n);

struct Panel {
    double lo;
    double hi;
};

/// Panels covering [breaks.front(), breaks.back()], split at every break and
/// graded geometrically (ratio 1/2, `levels` steps) toward both ends of every
/// piece. Integrable endpoint singularities are resolved this way.
std::vector<Panel> graded_panels(std::span<const double> breaks, int levels);

struct LineNode {
    double x;
    double w;
};

std::vector<LineNode> line_nodes(std::span<const Panel> panels, int order);

/// Panels narrower than narrow_width get the cheaper narrow_order rule.
std::vector<LineNode> line_nodes(std::span<const Panel> panels, int order, int narrow_order, double narrow_width);

struct QuadNode {
    double a;
    double c;
    double w;
};

/// Tensor Gauss-Legendre on the unit square with equal panels per axis.
struct QuadratureGrid {
    int panels_per_axis = 0;
    int points_per_panel = 0;
    std::vector<QuadNode> nodes;

    static QuadratureGrid tensor(int panels_per_axis, int points_per_panel = 20);
    QuadratureGrid refined() const;
    /// Smallest refinement whose panel edges contain (1/m)Z.
    QuadratureGrid aligned_to(int m) const;
    double weight_sum() const;
};

struct InnerProduct {
    cplx value;
    double error_estimate = 0.0;
    bool converged = true;  // refinement agreed to 1e-12 relative
};

/// int int F conj(G) da dc on the grid, compared against the grid with
/// doubled panels. The refined value is returned.
InnerProduct inner_product(const TwistedFn& F, const TwistedFn& G, const QuadratureGrid& grid);

/// Single-grid version without the refinement pass.
cplx inner(const TwistedFn& F, const TwistedFn& G, const QuadratureGrid& grid);

/// ||F||_p on the unit square; p = infinity gives the sampled maximum over
/// the grid nodes (a lower bound on the true supremum).
double lp_norm(const TwistedFn& F, double p, const QuadratureGrid& grid);

}  // namespace lerchlab
