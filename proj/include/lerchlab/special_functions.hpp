#pragma once

#include <complex>

namespace lerchlab {

using cplx = std::complex<double>;

enum class Parity { plus, minus };

// Exponent shift in the completed function pi^{-(s+eps)/2} Gamma((s+eps)/2).
constexpr int parity_epsilon(Parity p) { return p == Parity::plus ? 0 : 1; }

constexpr Parity flip(Parity p) { return p == Parity::plus ? Parity::minus : Parity::plus; }

constexpr double parity_sign(Parity p) { return p == Parity::plus ? 1.0 : -1.0; }

const char* to_string(Parity p);

/// Result of a gamma-type evaluation. When `is_pole` is set the value is
/// meaningless; poles are reported only at the analytic pole set.
struct GammaValue {
    cplx value{};
    bool is_pole = false;
};

/// Gamma(z) by a Lanczos approximation (g = 607/128, 15 terms) with the
/// reflection formula for Re z < 1/2.
GammaValue complex_gamma(cplx z);

/// Gamma_R^+(s) = pi^{-s/2} Gamma(s/2), Gamma_R^-(s) = Gamma_R^+(s+1).
GammaValue gamma_R(cplx s, Parity p);

/// gamma^p(s) = Gamma_R^p(s) / Gamma_R^p(1-s). A pole of the denominator
/// yields an exact zero.
GammaValue tate_gamma(cplx s, Parity p);

/// w_+ = 1, w_- = i.
cplx root_number(Parity p);

// sin(pi z), cos(pi z) with exact zeros at the integers for real z.
cplx sin_pi(cplx z);
double sin_pi(double x);
double cos_pi(double x);

// True when z lies within tol of a non-positive integer.
bool near_nonpositive_integer(cplx z, double tol = 1e-13);

}  // namespace lerchlab
