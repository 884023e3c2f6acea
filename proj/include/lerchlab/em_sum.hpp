#pragma once

// Summation kernels behind lerch_core. Exposed for unit tests.

#include "lerchlab/special_functions.hpp"

namespace lerchlab::detail {

struct SeriesSum {
    cplx value;
    double error = 0.0;
    long terms = 0;
};

/// sum_{n>=0} e^{2 pi i n a}(n+c)^{-s} by Euler-Maclaurin with the tail
/// integral taken along a rotated ray. Valid for every s when a is not an
/// integer; for integer a it is the Hurwitz continuation (s != 1).
SeriesSum lerch_em(cplx s, double a, double c, long max_terms);

/// The same series summed directly up to n0 and then by a Levin t-transform
/// of the remaining partial sums. Needs a away from the integers.
SeriesSum lerch_levin(cplx s, double a, double c, long max_terms);

/// B_{2j}/(2j)! for j = 1..60.
double bernoulli_ratio(int j);

/// Distance from x to the nearest integer.
double dist_to_integer(double x);

/// a reduced to (-1/2, 1/2].
double centered_fraction(double a);

/// e^{2 pi i x}, with x reduced mod 1 first.
cplx expi2pi(double x);

}  // namespace lerchlab::detail
