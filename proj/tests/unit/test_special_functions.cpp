#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "fixtures.hpp"
#include "lerchlab/special_functions.hpp"

using namespace lerchlab;

namespace {

double relerr(cplx x, cplx ref) { return std::abs(x - ref) / std::abs(ref); }

}  // namespace

TEST_CASE("complex_gamma at trivial points") {
    CHECK(relerr(complex_gamma(1.0).value, 1.0) < 1e-14);
    CHECK(relerr(complex_gamma(0.5).value, std::sqrt(std::numbers::pi)) < 1e-14);
    CHECK(relerr(complex_gamma(5.0).value, 24.0) < 1e-14);
}

TEST_CASE("complex_gamma matches the high-precision fixtures") {
    int n = 0;
    for (const auto& v : fixtures::kValues) {
        if (std::string(v.kind) != "gamma") continue;
        const GammaValue g = complex_gamma({v.s_re, v.s_im});
        CAPTURE(v.s_re);
        CAPTURE(v.s_im);
        REQUIRE_FALSE(g.is_pole);
        CHECK(relerr(g.value, {v.re, v.im}) < 1e-12);
        ++n;
    }
    CHECK(n == 7);
}

TEST_CASE("complex_gamma flags the poles") {
    for (int k = 0; k >= -6; --k) CHECK(complex_gamma(double(k)).is_pole);
    CHECK_FALSE(complex_gamma({-3.0, 1e-6}).is_pole);
    CHECK_FALSE(complex_gamma(-2.5).is_pole);
}

TEST_CASE("gamma_R values and the parity shift") {
    CHECK(relerr(gamma_R(1.0, Parity::plus).value, 1.0) < 1e-14);
    CHECK(relerr(gamma_R(0.0, Parity::minus).value, 1.0) < 1e-14);
    CHECK(relerr(gamma_R(2.0, Parity::plus).value, 1.0 / std::numbers::pi) < 1e-14);
    CHECK(gamma_R(0.0, Parity::plus).is_pole);
    CHECK(gamma_R(-2.0, Parity::plus).is_pole);
    CHECK(gamma_R(-1.0, Parity::minus).is_pole);
    CHECK_FALSE(gamma_R(-1.0, Parity::plus).is_pole);

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> X(-3, 4), Y(-10, 10);
    for (int i = 0; i < 50; ++i) {
        const cplx s{X(rng), Y(rng)};
        const GammaValue m = gamma_R(s, Parity::minus), p = gamma_R(s + 1.0, Parity::plus);
        CHECK(m.value == p.value);
    }
}

TEST_CASE("tate_gamma fixtures and examples") {
    CHECK(relerr(tate_gamma(0.5, Parity::plus).value, 1.0) < 1e-14);
    const cplx prod = tate_gamma({0.3, 0.7}, Parity::plus).value * tate_gamma({0.7, -0.7}, Parity::plus).value;
    CHECK(std::abs(prod - 1.0) < 1e-12);
    for (const auto& v : fixtures::kValues) {
        const std::string kind = v.kind;
        if (kind != "tate_plus" && kind != "tate_minus") continue;
        const Parity p = kind == "tate_plus" ? Parity::plus : Parity::minus;
        CAPTURE(kind);
        CAPTURE(v.s_re);
        CHECK(relerr(tate_gamma({v.s_re, v.s_im}, p).value, {v.re, v.im}) < 1e-12);
    }
}

TEST_CASE("tate_gamma zeros and poles sit at the integers implied by Gamma_R") {
    // gamma+(s) = Gamma_R(s)/Gamma_R(1-s): poles at s = 0,-2,..., zeros at s = 1,3,...
    for (int k : {0, -2, -4}) CHECK(tate_gamma(double(k), Parity::plus).is_pole);
    for (int k : {1, 3, 5}) {
        const GammaValue g = tate_gamma(double(k), Parity::plus);
        CHECK_FALSE(g.is_pole);
        CHECK(std::abs(g.value) == 0.0);
    }
    // gamma-: poles at s = -1,-3,..., zeros at s = 2,4,...
    for (int k : {-1, -3}) CHECK(tate_gamma(double(k), Parity::minus).is_pole);
    for (int k : {2, 4}) CHECK(std::abs(tate_gamma(double(k), Parity::minus).value) == 0.0);
}

TEST_CASE("tate_gamma reflection on the test rectangle") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> X(-3, 4), Y(-10, 10);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const cplx s{X(rng), Y(rng)};
        if (std::abs(s.imag()) < 0.05) continue;
        for (Parity p : {Parity::plus, Parity::minus})
            worst = std::max(worst, std::abs(tate_gamma(s, p).value * tate_gamma(1.0 - s, p).value - 1.0));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("gamma recurrence on the test rectangle") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> X(-3, 4), Y(-10, 10);
    for (int i = 0; i < 200; ++i) {
        const cplx z{X(rng), Y(rng)};
        const cplx g0 = complex_gamma(z).value, g1 = complex_gamma(z + 1.0).value;
        CHECK(std::abs(g1 - z * g0) / std::abs(g1) < 1e-11);
    }
}

TEST_CASE("root numbers") {
    CHECK(root_number(Parity::plus) == cplx(1.0, 0.0));
    CHECK(root_number(Parity::minus) == cplx(0.0, 1.0));
    for (Parity p : {Parity::plus, Parity::minus}) CHECK(std::abs(std::pow(root_number(p), 4) - 1.0) < 1e-15);
}

TEST_CASE("parity helpers") {
    CHECK(parity_epsilon(Parity::plus) == 0);
    CHECK(parity_epsilon(Parity::minus) == 1);
    CHECK(flip(Parity::plus) == Parity::minus);
    CHECK(std::string(to_string(Parity::minus)) == "-");
}
