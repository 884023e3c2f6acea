#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lerchlab/checks.hpp"
#include "lerchlab/errors.hpp"
#include "lerchlab/functions.hpp"
#include "lerchlab/twisted.hpp"

using namespace lerchlab;

namespace {

cplx e2pi(double x) { return std::polar(1.0, 2.0 * std::numbers::pi * x); }

// Non-symmetric core so that mixed-up coordinates show.
TwistedFn sample_fn() {
    return TwistedFn([](double a, double c) { return cplx(1.0 + a + 2.0 * c * c, a * c - 0.3 * a); }, 1, "poly");
}

}  // namespace

TEST_CASE("extension rules") {
    const TwistedFn F = sample_fn();
    CHECK(std::abs(F(1.3, 0.4) - F(0.3, 0.4)) < 1e-15);
    CHECK(std::abs(F(0.3, 2.4) - e2pi(-0.6) * F.core(0.3, 0.4)) < 1e-14);
    CHECK(std::abs(F(-0.7, 0.4) - F.core(0.3, 0.4)) < 1e-15);
    CHECK(std::abs(F(0.3, -0.6) - e2pi(0.3) * F.core(0.3, 0.4)) < 1e-14);
    // The two rules commute.
    CHECK(std::abs(F(2.3, 3.4) - F(0.3, 3.4)) < 1e-14);
}

TEST_CASE("grid points are rejected") {
    const TwistedFn F = sample_fn();
    CHECK_THROWS_AS(F(0.0, 0.5), GridPointError);
    CHECK_THROWS_AS(F(0.5, 2.0), GridPointError);
    CHECK_THROWS_AS(extend(F, 0.5, 1.0 + 1e-14), GridPointError);
    CHECK_NOTHROW(extend(F, 0.5, 1.0 + 1e-12));
    const TwistedFn T3 = apply_hecke(OpKind::T, 3, F);
    CHECK(T3.denominator() == 3);
    CHECK_THROWS_AS(T3(0.5, 1.0 / 3.0), GridPointError);
    CHECK_NOTHROW(T3(0.5, 0.3));
}

TEST_CASE("lattice_distance") {
    CHECK(lattice_distance(0.26, 4) == doctest::Approx(0.01));
    CHECK(lattice_distance(-0.74, 4) == doctest::Approx(0.01));
    CHECK(lattice_distance(0.5, 2) == doctest::Approx(0.0));
}

TEST_CASE("OperatorSpec validation and names") {
    CHECK_THROWS_AS(OperatorSpec::hecke(OpKind::T, 0), DomainError);
    CHECK_THROWS_AS(OperatorSpec::hecke(OpKind::R_pow, 2), DomainError);
    CHECK_THROWS_AS(OperatorSpec::r_pow(4), DomainError);
    CHECK_THROWS_AS((OperatorSpec{OpKind::D_plus, 3}.validate()), DomainError);
    CHECK(OperatorSpec::hecke(OpKind::S_vee, 5).name() == "S_vee_5");
    CHECK(OperatorSpec::r_pow(2).name() == "R^2");
    CHECK(OperatorSpec::plain(OpKind::D_L).is_differential());
    CHECK(OperatorSpec::hecke(OpKind::T, 2).is_hecke());
}

TEST_CASE("Hecke operators on a test function") {
    Rng rng(17);
    const TwistedFn F = random_test_function(rng);
    const auto pts = sample_points(rng, 50, 6);
    const TwistedFn T1 = apply_hecke(OpKind::T, 1, F);
    const TwistedFn T23 = apply_hecke(OpKind::T, 2, apply_hecke(OpKind::T, 3, F));
    const TwistedFn T6 = apply_hecke(OpKind::T, 6, F);
    const TwistedFn ST = apply_hecke(OpKind::S, 4, apply_hecke(OpKind::T, 4, F));
    for (const Point& p : pts) {
        CHECK(std::abs(T1(p.a, p.c) - F(p.a, p.c)) < 1e-15);
        CHECK(std::abs(T23(p.a, p.c) - T6(p.a, p.c)) < 1e-12);
        CHECK(std::abs(ST(p.a, p.c) - F(p.a, p.c) / 4.0) < 1e-12);
    }
}

TEST_CASE("Hecke images stay twisted-periodic") {
    Rng rng(19);
    const TwistedFn F = random_test_function(rng);
    for (OpKind k : {OpKind::T, OpKind::S, OpKind::T_vee, OpKind::S_vee}) {
        const TwistedFn H = apply_hecke(k, 3, F);
        for (const Point& p : sample_points(rng, 10, 3)) {
            const cplx h = H(p.a, p.c);
            CHECK(std::abs(H(p.a + 1.0, p.c) - h) < 1e-12);
            CHECK(std::abs(H(p.a, p.c + 1.0) - e2pi(-p.a) * h) < 1e-12);
        }
    }
}

TEST_CASE("R powers") {
    Rng rng(23);
    const TwistedFn F = random_test_function(rng);
    const TwistedFn R1 = apply_R(F, 1);
    const TwistedFn RR = apply_R(R1, 1);
    const TwistedFn R2 = apply_R(F, 2);
    const TwistedFn R3 = apply_R(F, 3);
    const TwistedFn RRR = apply_R(RR, 1);
    const TwistedFn R4 = apply_R(RRR, 1);
    for (const Point& p : sample_points(rng, 30)) {
        CHECK(std::abs(RR(p.a, p.c) - R2(p.a, p.c)) < 1e-13);
        CHECK(std::abs(RRR(p.a, p.c) - R3(p.a, p.c)) < 1e-13);
        CHECK(std::abs(R4(p.a, p.c) - F(p.a, p.c)) < 1e-13);
        CHECK(apply_R(F, 0)(p.a, p.c) == F(p.a, p.c));
    }
    CHECK_THROWS_AS(apply_R(F, 4), DomainError);
}

TEST_CASE("R image is twisted-periodic across cell boundaries") {
    Rng rng(29);
    const TwistedFn R1 = apply_R(random_test_function(rng), 1);
    // Straddle the a = 1 and c = 1 lines from both sides.
    for (double a : {0.999, 1.001, 1.5}) {
        for (double c : {0.999, 1.001, 2.25}) {
            const cplx v = R1(a, c);
            CHECK(std::abs(R1(a + 1.0, c) - v) < 1e-12);
            CHECK(std::abs(R1(a, c + 1.0) - e2pi(-a) * v) < 1e-12);
        }
    }
}

TEST_CASE("J fixes L+ and negates L-") {
    for (double s : {2.0, 0.6}) {
        const TwistedFn Lp = L_fn(s, Parity::plus), Lm = L_fn(s, Parity::minus);
        const TwistedFn JLp = apply_R(Lp, 2), JLm = apply_R(Lm, 2);
        for (Point p : {Point{0.3, 0.45}, Point{0.71, 0.12}}) {
            CHECK(std::abs(JLp(p.a, p.c) - Lp(p.a, p.c)) < 1e-10);
            CHECK(std::abs(JLm(p.a, p.c) + Lm(p.a, p.c)) < 1e-10);
        }
    }
}

TEST_CASE("apply_operator dispatch") {
    Rng rng(31);
    const TwistedFn F = random_test_function(rng);
    CHECK(std::abs(apply_operator(OperatorSpec::plain(OpKind::J), F)(0.3, 0.4) - apply_R(F, 2)(0.3, 0.4)) < 1e-15);
    CHECK_THROWS_AS(apply_operator(OperatorSpec::plain(OpKind::D_L), F), DomainError);
}

TEST_CASE("linear combinations track the denominator") {
    Rng rng(37);
    const TwistedFn F = random_test_function(rng);
    const TwistedFn G = linear_combination(2.0, apply_hecke(OpKind::T, 2, F), cplx(0, 1), apply_hecke(OpKind::T, 3, F));
    CHECK(G.denominator() == 6);
    CHECK(std::abs(scale(3.0, F)(0.3, 0.4) - 3.0 * F(0.3, 0.4)) < 1e-15);
}

TEST_CASE("kubert_1d") {
    const LineFn f = [](double x) { return cplx(x * x, std::sin(x)); };
    CHECK(kubert_1d(1, f, 0.3) == f(0.3));
    const LineFn one = [](double) { return cplx(1.0); };
    CHECK(std::abs(kubert_1d(2, one, 0.7) - 1.0) < 1e-15);
    CHECK_THROWS_AS(kubert_1d(2, f, 1.2), DomainError);
    CHECK_THROWS_AS(kubert_1d(0, f, 0.5), DomainError);
    // Hurwitz eigenfunction with eigenvalue m^{-s}.
    const double s = 0.4;
    const LineFn h = [s](double x) { return hurwitz(1.0 - s, x).value; };
    for (int m = 2; m <= 6; ++m)
        CHECK(std::abs(kubert_1d(m, h, 0.37) - std::pow(double(m), -s) * h(0.37)) < 1e-9);
}

TEST_CASE("dilation_1d") {
    const LineFn f = [](double x) { return cplx(std::cos(2 * std::numbers::pi * x), x); };
    CHECK(dilation_1d(1, f, 0.3) == f(0.3));
    const LineFn g = [f](double c) { return dilation_1d(3, f, c); };
    CHECK(std::abs(dilation_1d(2, g, 0.11) - f(0.66)) < 1e-15);
    const LineFn periodic = [](double x) { return cplx(std::sin(2 * std::numbers::pi * x)); };
    CHECK(std::abs(dilation_1d(3, periodic, 0.2) - dilation_1d(3, periodic, 1.2)) < 1e-12);
    CHECK_THROWS_AS(dilation_1d(0, f, 0.3), DomainError);
}

TEST_CASE("zeta operator partial sums") {
    // (a, c) irrational enough to miss every (1/m)Z with m <= 50.
    const double a = 0.3071, c = 0.6123;
    const TwistedFn Z3 = zeta_star_fn(3.0);
    CHECK(zeta_operator_partial(1, Z3, a, c) == Z3(a, c));
    const double zeta3 = 1.2020569031595942854;
    const double zeta4 = std::pow(std::numbers::pi, 4) / 90.0;
    const cplx f3 = Z3(a, c);
    // Tail sum_{m>M} m^{-s} < M^{1-s}/(s-1).
    CHECK(std::abs(zeta_operator_partial(50, Z3, a, c) - zeta3 * f3) < std::abs(f3) / (2.0 * 50 * 50));
    const TwistedFn Z4 = zeta_star_fn(4.0);
    const cplx f4 = Z4(a, c);
    CHECK(std::abs(zeta_operator_partial(30, Z4, a, c) - zeta4 * f4) < std::abs(f4) / (3.0 * 30 * 30 * 30));
    CHECK_THROWS_AS(zeta_operator_partial(0, Z3, a, c), DomainError);
}
