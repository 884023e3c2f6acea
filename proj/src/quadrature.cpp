#include "lerchlab/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>

#include "lerchlab/errors.hpp"
#include "lerchlab/kernels.hpp"

namespace lerchlab {

namespace {

GaussRule compute_rule(int n) {
    GaussRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int k = 1; k <= n; ++k) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
            }
            dp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        r.x[i] = 0.5 * (1.0 - z);
        r.x[n - 1 - i] = 0.5 * (1.0 + z);
        r.w[i] = r.w[n - 1 - i] = 0.5 * w;
    }
    return r;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
    if (n < 1 || n > 512) throw DomainError("gauss_legendre: order out of range");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<GaussRule>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<GaussRule>(compute_rule(n));
    return *slot;
}

std::vector<Panel> graded_panels(std::span<const double> breaks, int levels) {
    std::vector<Panel> out;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const double x0 = breaks[i], x1 = breaks[i + 1];
        if (!(x1 > x0)) throw DomainError("graded_panels: breakpoints must increase");
        const double half = 0.5 * (x1 - x0);
        std::vector<double> pts{x0};
        for (int k = levels; k >= 1; --k) pts.push_back(x0 + half * std::ldexp(1.0, -k));
        pts.push_back(x0 + half);
        for (int k = 1; k <= levels; ++k) pts.push_back(x1 - half * std::ldexp(1.0, -k));
        pts.push_back(x1);
        for (std::size_t j = 0; j + 1 < pts.size(); ++j) out.push_back({pts[j], pts[j + 1]});
    }
    return out;
}

std::vector<LineNode> line_nodes(std::span<const Panel> panels, int order, int narrow_order, double narrow_width) {
    const GaussRule& wide = gauss_legendre(order);
    const GaussRule& narrow = gauss_legendre(narrow_order);
    std::vector<LineNode> out;
    for (const Panel& p : panels) {
        const double len = p.hi - p.lo;
        const GaussRule& g = len < narrow_width ? narrow : wide;
        for (std::size_t i = 0; i < g.x.size(); ++i) out.push_back({p.lo + len * g.x[i], len * g.w[i]});
    }
    return out;
}

std::vector<LineNode> line_nodes(std::span<const Panel> panels, int order) {
    return line_nodes(panels, order, order, 0.0);
}

QuadratureGrid QuadratureGrid::tensor(int panels_per_axis, int points_per_panel) {
    if (panels_per_axis < 1 || points_per_panel < 1) throw DomainError("QuadratureGrid: sizes must be positive");
    QuadratureGrid q;
    q.panels_per_axis = panels_per_axis;
    q.points_per_panel = points_per_panel;
    const GaussRule& g = gauss_legendre(points_per_panel);
    std::vector<LineNode> line;
    const double h = 1.0 / panels_per_axis;
    for (int p = 0; p < panels_per_axis; ++p)
        for (int i = 0; i < points_per_panel; ++i) line.push_back({(p + g.x[i]) * h, g.w[i] * h});
    q.nodes.reserve(line.size() * line.size());
    for (const LineNode& x : line)
        for (const LineNode& y : line) q.nodes.push_back({x.x, y.x, x.w * y.w});
    return q;
}

QuadratureGrid QuadratureGrid::refined() const { return tensor(2 * panels_per_axis, points_per_panel); }

QuadratureGrid QuadratureGrid::aligned_to(int m) const {
    if (m < 1) throw DomainError("QuadratureGrid::aligned_to: m must be positive");
    const int p = std::lcm(panels_per_axis, m);
    return p == panels_per_axis ? *this : tensor(p, points_per_panel);
}

double QuadratureGrid::weight_sum() const {
    double s = 0.0;
    for (const QuadNode& q : nodes) s += q.w;
    return s;
}

cplx inner(const TwistedFn& F, const TwistedFn& G, const QuadratureGrid& grid) {
    return kernels::inner_parallel(F, G, grid.nodes);
}

InnerProduct inner_product(const TwistedFn& F, const TwistedFn& G, const QuadratureGrid& grid) {
    const cplx coarse = inner(F, G, grid);
    const cplx fine = inner(F, G, grid.refined());
    InnerProduct r;
    r.value = fine;
    r.error_estimate = std::abs(fine - coarse);
    r.converged = r.error_estimate <= 1e-12 * std::max(1.0, std::abs(fine));
    return r;
}

double lp_norm(const TwistedFn& F, double p, const QuadratureGrid& grid) {
    if (!(p >= 1.0)) throw DomainError("lp_norm: p must be at least 1");
    const double s = kernels::power_sum_parallel(F, p, grid.nodes);
    if (std::isinf(p)) return s;
    return std::pow(s, 1.0 / p);
}

}  // namespace lerchlab
