#include "lerchlab/em_sum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "lerchlab/errors.hpp"

namespace lerchlab::detail {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = 2.220446049250313e-16;
constexpr int kMaxJ = 60;

std::array<double, kMaxJ + 1> make_bernoulli_ratios() {
    std::array<double, kMaxJ + 1> b{};
    const double pi2 = kPi * kPi;
    const std::array<double, 4> exact = {pi2 / 6, pi2 * pi2 / 90, pi2 * pi2 * pi2 / 945,
                                         pi2 * pi2 * pi2 * pi2 / 9450};
    for (int j = 1; j <= kMaxJ; ++j) {
        double z;
        if (j <= 4) {
            z = exact[j - 1];
        } else {
            z = 0.0;
            for (int n = 100; n >= 1; --n) z += std::pow(double(n), -2.0 * j);
        }
        const double sign = (j % 2 == 1) ? 1.0 : -1.0;
        b[j] = sign * 2.0 * z * std::pow(2.0 * kPi, -2.0 * j);
    }
    return b;
}

const std::array<double, kMaxJ + 1>& bernoulli_table() {
    static const auto table = make_bernoulli_ratios();
    return table;
}

// d * int_0^inf e^{i omega X d t}(1 + d t)^{-s} dt along the ray d = e^{i sigma theta}
// (sigma = sign omega), by the exp-sinh trapezoid rule refined until two
// levels agree. Along the ray the exponential decays like e^{-lambda sin(theta) t}
// while |(1+dt)^{-s}| grows at most by e^{|Im s| theta}.
struct TailIntegral {
    cplx value;
    double error;
};

TailIntegral rotated_tail(cplx s, double lambda, double sigma, double theta) {
    const cplx d = std::polar(1.0, sigma * theta);
    const cplx expo = cplx{0.0, sigma * lambda} * d;
    auto integrand = [&](double u, double& mag) -> cplx {
        const double t = std::exp(0.5 * kPi * std::sinh(u));
        const double decay = expo.real() * t;
        if (decay < -745.0 || t > 1e300) {
            mag = 0.0;
            return {};
        }
        const double w = 0.5 * kPi * std::cosh(u) * t;
        const cplx v = w * std::exp(-s * std::log(1.0 + d * t) + expo * t);
        mag = std::abs(v);
        return v;
    };
    const double U = 4.5;
    double h = 0.125;
    cplx sum{};
    double abs_sum = 0.0;
    const int n0 = int(std::lround(U / h));
    for (int k = -n0; k <= n0; ++k) {
        double m;
        sum += integrand(k * h, m);
        abs_sum += m;
    }
    cplx prev = sum * h;
    double diff = INFINITY;
    for (int level = 0; level < 7; ++level) {
        const int nodes = int(std::lround(U / h));
        for (int k = -nodes; k < nodes; ++k) {
            double m;
            sum += integrand((k + 0.5) * h, m);
            abs_sum += m;
        }
        h *= 0.5;
        const cplx cur = sum * h;
        diff = std::abs(cur - prev);
        const double noise = 8.0 * kEps * abs_sum * h;
        prev = cur;
        if (diff <= std::max(1e-15 * std::abs(cur), noise)) return {d * cur, std::max(diff, noise)};
    }
    // Not settled: report the last change.
    return {d * prev, diff};
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
    return r;
}

}  // namespace

double bernoulli_ratio(int j) {
    if (j < 1 || j > kMaxJ) throw DomainError("bernoulli_ratio: index out of range");
    return bernoulli_table()[j];
}

double dist_to_integer(double x) { return std::abs(x - std::round(x)); }

double centered_fraction(double a) {
    double r = a - std::round(a);
    if (r <= -0.5) r += 1.0;
    return r;
}

cplx expi2pi(double x) {
    const double f = x - std::floor(x);
    return std::polar(1.0, 2.0 * kPi * f);
}

SeriesSum lerch_em(cplx s, double a, double c, long max_terms) {
    if (!(c > 0.0)) throw DomainError("lerch_em: c must be positive");
    const double ar = centered_fraction(a);
    const bool hurwitz = std::abs(ar) < 1e-15;
    if (hurwitz && std::abs(s - 1.0) < 1e-13) throw DegenerateError("pole of the Hurwitz zeta function at s = 1");

    const double omega = 2.0 * kPi * ar;
    const double abs_s = std::abs(s);
    const double q = 0.05;
    const double ratio = std::abs(ar) + q;
    int J = int(std::ceil(19.6 / -std::log(ratio)));
    J = std::clamp(J, 4, kMaxJ);

    double X = (abs_s + 2.0 * J + 1.0) / (2.0 * kPi * q);
    X = std::max(X, c + 8.0);
    long N = long(std::ceil(X - c));
    N = std::min(N, max_terms);
    N = std::max(N, 1L);
    X = double(N) + c;

    // Head.
    cplx head{};
    double head_abs = 0.0;
    for (long n = 0; n < N; ++n) {
        const double lx = std::log(double(n) + c);
        const double mag = std::exp(-s.real() * lx);
        const double phase = -s.imag() * lx / (2.0 * kPi) + ar * double(n);
        const cplx term = mag * expi2pi(phase);
        head += term;
        head_abs += mag;
    }

    const double lX = std::log(X);
    const cplx X_ms = std::exp(-s * lX);
    const cplx eN = expi2pi(ar * double(N));

    // Tail integral.
    cplx tail;
    double tail_err;
    if (hurwitz) {
        tail = X * X_ms / (s - 1.0);
        tail_err = kEps * std::abs(tail);
    } else {
        const double sigma = omega > 0 ? 1.0 : -1.0;
        // A quarter turn when the exponential decay beats the growth of the
        // power along the ray, otherwise a shallow ray.
        const double lambda = std::abs(omega) * X;
        double theta = 0.5 * kPi;
        if (lambda < std::abs(s.imag()) + 5.0) theta = std::min(theta, 2.0 / std::abs(s.imag()));
        TailIntegral K = rotated_tail(s, lambda, sigma, theta);
        tail = eN * X * X_ms * K.value;
        tail_err = std::abs(X * X_ms) * K.error;
    }

    // Boundary corrections: f(N)/2 - sum_j b_j f^{(2j-1)}(N).
    const int M = 2 * J;
    std::vector<cplx> d(M + 1);
    d[0] = 1.0;
    for (int k = 0; k < M; ++k) d[k + 1] = -d[k] * (s + double(k)) / X;
    std::vector<cplx> iw(M + 1);
    iw[0] = 1.0;
    for (int k = 0; k < M; ++k) iw[k + 1] = iw[k] * cplx{0.0, omega};

    cplx corr = 0.5;
    double last = 0.0;
    double corr_abs = 0.5;
    for (int j = 1; j <= J; ++j) {
        const int m = 2 * j - 1;
        cplx deriv{};
        for (int k = 0; k <= m; ++k) deriv += binomial(m, k) * iw[m - k] * d[k];
        const cplx term = bernoulli_ratio(j) * deriv;
        corr -= term;
        last = std::abs(term);
        corr_abs += last;
    }
    const cplx boundary = eN * X_ms * corr;
    const double scale = std::abs(X_ms);

    SeriesSum out;
    out.value = head + tail + boundary;
    out.terms = N;
    out.error = 2.0 * last * scale + tail_err + 8.0 * kEps * (head_abs + corr_abs * scale + std::abs(tail)) +
                kEps * double(N) * kEps * head_abs;
    return out;
}

SeriesSum lerch_levin(cplx s, double a, double c, long max_terms) {
    if (!(c > 0.0)) throw DomainError("lerch_levin: c must be positive");
    const double ar = centered_fraction(a);
    if (std::abs(ar) < 1e-6) throw DomainError("lerch_levin: a too close to an integer");
    const double omega = 2.0 * kPi * std::abs(ar);

    long n0 = long(std::ceil(2.0 * std::abs(s.imag()) / omega)) + 2;
    n0 = std::max(n0, long(std::ceil(std::max(0.0, 2.0 - c))));
    constexpr int kMaxK = 36;
    if (n0 + kMaxK + 2 > max_terms) throw ConvergenceError("lerch_levin: max_terms too small for this s");

    auto term = [&](long n, double& mag) {
        const double lx = std::log(double(n) + c);
        mag = std::exp(-s.real() * lx);
        return mag * expi2pi(-s.imag() * lx / (2.0 * kPi) + ar * double(n));
    };

    cplx head{};
    double head_abs = 0.0;
    for (long n = 0; n < n0; ++n) {
        double m;
        head += term(n, m);
        head_abs += m;
    }

    std::array<cplx, kMaxK + 2> t{};
    std::array<cplx, kMaxK + 2> S{};
    double tail_abs = 0.0;
    for (int j = 0; j < kMaxK + 2; ++j) {
        double m;
        t[j] = term(n0 + j, m);
        tail_abs += m;
        S[j] = (j == 0 ? cplx{} : S[j - 1]) + t[j];
    }

    // Levin d-transform: remainder estimates w_j = t_{j+1}, beta = 1.
    const double beta = 1.0;
    cplx best{};
    double best_err = INFINITY;
    cplx prev{};
    double prev_diff = INFINITY;
    double cond = 1.0;
    for (int k = 1; k <= kMaxK; ++k) {
        cplx num{}, den{};
        double abs_num = 0.0;
        for (int j = 0; j <= k; ++j) {
            const double sign = (j % 2 == 0) ? 1.0 : -1.0;
            const double wgt = sign * binomial(k, j) * std::pow((beta + j) / (beta + k), k - 1);
            const cplx inv = 1.0 / t[j + 1];
            num += wgt * S[j] * inv;
            den += wgt * inv;
            abs_num += std::abs(wgt * inv);
        }
        const cplx L = num / den;
        cond = abs_num / std::abs(den);
        if (k >= 2) {
            const double diff = std::abs(L - prev);
            const double err = std::max(diff, prev_diff) + cond * kEps * (std::abs(L) + std::abs(S[k]));
            if (k >= 3 && err < best_err) {
                best_err = err;
                best = L;
            }
            if (k >= 6 && err <= 1e-15 * std::abs(L)) break;
            prev_diff = diff;
        }
        prev = L;
    }

    SeriesSum out;
    out.value = head + best;
    out.error = best_err + 4.0 * kEps * head_abs;
    out.terms = n0 + kMaxK + 2;
    (void)tail_abs;
    return out;
}

}  // namespace lerchlab::detail
