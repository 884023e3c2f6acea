#include "lerchlab/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>

namespace lerchlab::kernels {

namespace {

// Exceptions may not leave an OpenMP region; the first one is parked here
// and rethrown after the loop.
class ErrorSlot {
public:
    void capture() {
        std::lock_guard<std::mutex> lock(mu_);
        if (!err_) err_ = std::current_exception();
    }
    void rethrow() const {
        if (err_) std::rethrow_exception(err_);
    }

private:
    std::mutex mu_;
    std::exception_ptr err_;
};

double node_power(cplx v, double p) {
    const double m = std::abs(v);
    if (p == 1.0) return m;
    if (p == 2.0) return m * m;
    return std::pow(m, p);
}

}  // namespace

void evaluate_serial(const TwistedFn& F, std::span<const Point> pts, std::span<cplx> out) {
    for (std::size_t i = 0; i < pts.size(); ++i) out[i] = F.eval(pts[i].a, pts[i].c);
}

void evaluate_parallel(const TwistedFn& F, std::span<const Point> pts, std::span<cplx> out) {
    ErrorSlot slot;
    const long n = long(pts.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < n; ++i) {
        try {
            out[i] = F.eval(pts[i].a, pts[i].c);
        } catch (...) {
            slot.capture();
        }
    }
    slot.rethrow();
}

void evaluate_line_serial(const LineFn& f, std::span<const double> xs, std::span<cplx> out) {
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = f(xs[i]);
}

void evaluate_line_parallel(const LineFn& f, std::span<const double> xs, std::span<cplx> out) {
    ErrorSlot slot;
    const long n = long(xs.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < n; ++i) {
        try {
            out[i] = f(xs[i]);
        } catch (...) {
            slot.capture();
        }
    }
    slot.rethrow();
}

cplx inner_serial(const TwistedFn& F, const TwistedFn& G, std::span<const QuadNode> nodes) {
    double re = 0.0, im = 0.0;
    for (const QuadNode& q : nodes) {
        const cplx v = q.w * F.eval(q.a, q.c) * std::conj(G.eval(q.a, q.c));
        re += v.real();
        im += v.imag();
    }
    return {re, im};
}

cplx inner_parallel(const TwistedFn& F, const TwistedFn& G, std::span<const QuadNode> nodes) {
    ErrorSlot slot;
    double re = 0.0, im = 0.0;
    const long n = long(nodes.size());
#pragma omp parallel for reduction(+ : re, im) schedule(static)
    for (long i = 0; i < n; ++i) {
        try {
            const QuadNode& q = nodes[i];
            const cplx v = q.w * F.eval(q.a, q.c) * std::conj(G.eval(q.a, q.c));
            re += v.real();
            im += v.imag();
        } catch (...) {
            slot.capture();
        }
    }
    slot.rethrow();
    return {re, im};
}

double power_sum_serial(const TwistedFn& F, double p, std::span<const QuadNode> nodes) {
    double acc = 0.0;
    for (const QuadNode& q : nodes) {
        const cplx v = F.eval(q.a, q.c);
        acc = std::isinf(p) ? std::max(acc, std::abs(v)) : acc + q.w * node_power(v, p);
    }
    return acc;
}

double power_sum_parallel(const TwistedFn& F, double p, std::span<const QuadNode> nodes) {
    ErrorSlot slot;
    const long n = long(nodes.size());
    double acc = 0.0;
    if (std::isinf(p)) {
#pragma omp parallel for reduction(max : acc) schedule(static)
        for (long i = 0; i < n; ++i) {
            try {
                acc = std::max(acc, std::abs(F.eval(nodes[i].a, nodes[i].c)));
            } catch (...) {
                slot.capture();
            }
        }
    } else {
#pragma omp parallel for reduction(+ : acc) schedule(static)
        for (long i = 0; i < n; ++i) {
            try {
                acc += nodes[i].w * node_power(F.eval(nodes[i].a, nodes[i].c), p);
            } catch (...) {
                slot.capture();
            }
        }
    }
    slot.rethrow();
    return acc;
}

}  // namespace lerchlab::kernels
