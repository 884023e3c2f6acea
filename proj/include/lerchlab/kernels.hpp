#pragma once

// Data-parallel loops used by quadrature and the sampling checks. Each kernel
// has an OpenMP version and a plain serial reference with the same
// summation order per chunk; tests compare the two and the benchmark target
// times them.

#include <span>

#include "lerchlab/quadrature.hpp"
#include "lerchlab/twisted.hpp"

namespace lerchlab::kernels {

void evaluate_serial(const TwistedFn& F, std::span<const Point> pts, std::span<cplx> out);
void evaluate_parallel(const TwistedFn& F, std::span<const Point> pts, std::span<cplx> out);

void evaluate_line_serial(const LineFn& f, std::span<const double> xs, std::span<cplx> out);
void evaluate_line_parallel(const LineFn& f, std::span<const double> xs, std::span<cplx> out);

/// sum_i w_i F(a_i,c_i) conj(G(a_i,c_i)).
cplx inner_serial(const TwistedFn& F, const TwistedFn& G, std::span<const QuadNode> nodes);
cplx inner_parallel(const TwistedFn& F, const TwistedFn& G, std::span<const QuadNode> nodes);

/// sum_i w_i |F|^p, or max_i |F| when p is infinite.
double power_sum_serial(const TwistedFn& F, double p, std::span<const QuadNode> nodes);
double power_sum_parallel(const TwistedFn& F, double p, std::span<const QuadNode> nodes);

}  // namespace lerchlab::kernels
