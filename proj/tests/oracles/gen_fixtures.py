#!/usr/bin/env python3
"""Regenerate tests/oracles/fixtures.hpp from mpmath at 40 digits.

The values are frozen into the header; the build never runs this script.
Usage: python3 tests/oracles/gen_fixtures.py > tests/oracles/fixtures.hpp
"""
from mpmath import mp, mpc, mpf, lerchphi, exp, pi, gamma, zeta

mp.dps = 40
I = mpc(0, 1)


def zeta_l(s, a, c):
    if a == 0:
        return zeta(s, c)
    return lerchphi(exp(2 * pi * I * a), s, c)


def zeta_star(s, a, c):
    # sum over n + c > 0
    k = int(mp.floor(c))
    c1 = c - k
    return exp(-2 * pi * I * k * a) * zeta_l(s, a, c1)


def L(s, a, c, sign):
    return zeta_l(s, a, c) + sign * exp(-2 * pi * I * a) * zeta_l(s, 1 - a, 1 - c)


def gamma_r(s, sign):
    e = 0 if sign > 0 else 1
    return pi ** (-(s + e) / 2) * gamma((s + e) / 2)


def tate(s, sign):
    return gamma_r(s, sign) / gamma_r(1 - s, sign)


rows = []


def add(kind, s, a, c, v):
    s = mpc(s)
    v = mpc(v)
    rows.append((kind, float(s.real), float(s.imag), float(a), float(c), v))


for z in [mpc(2, 3), mpc("0.3", "-4.2"), mpc("-2.5", "0.5"), mpc("10.5", "20"), mpc("-7.3", 0), mpc("40", "10"),
          mpc("0.001", "0.002")]:
    add("gamma", z, 0, 0, gamma(z))

for s, sg in [(2, 1), (mpc("0.3", "0.7"), -1), (mpc("-1.5"), 1), (mpc("0.5", "14"), 1), (mpc("2.5", "-3"), -1)]:
    add("tate_plus" if sg > 0 else "tate_minus", mpc(s), 0, 0, tate(mpc(s), sg))

third = mpf(1) / 3
zeta_pts = [
    (3, third, mpf("0.5")),
    (mpf("0.5"), third, mpf("0.25")),
    (mpc("0.9", "14.1"), mpf("0.41"), mpf("0.37")),
    (mpc("-0.4", "3"), mpf("0.2"), mpf("0.9")),
    (mpc("-3.5", "2"), mpf("0.3"), mpf("0.6")),
    (mpc("0.5", "20"), mpf("0.05"), mpf("0.3")),
    (mpc("1.2", "-7"), mpf("0.97"), mpf("0.02")),
    (mpc("-2.5", "0"), mpf("0.75"), mpf("2.3")),
    (mpc("4", "1"), mpf("0.1"), mpf("0.001")),
    (mpc("0.7", "0"), mpf("0.5"), mpf("0.5")),
]
for s, a, c in zeta_pts:
    add("zeta", s, a, c, zeta_l(mpc(s), a, c))

for s, a, c in [(2, mpf("0.25"), mpf("-0.75")), (mpf("0.7"), mpf("0.6"), mpf("3.2")), (mpc("-1.5", "1"), mpf("0.35"), mpf("-1.4"))]:
    add("zeta_star", s, a, c, zeta_star(mpc(s), a, c))

for s, a, c in [(2, third, mpf("0.5")), (mpf("-1.5"), mpf("0.3"), mpf("0.6")), (mpc("0.5", "3"), mpf("0.25"), mpf("0.7")),
                (mpc("-4.2", "6"), mpf("0.8"), mpf("0.15"))]:
    add("L_plus", s, a, c, L(mpc(s), a, c, 1))
    add("L_minus", s, a, c, L(mpc(s), a, c, -1))

for s, x in [(mpf("-1.5"), mpf("0.3")), (mpf("0.5"), mpf("0.7")), (mpc("1.5", "-3"), mpf("0.125")), (mpf("-6.5"), mpf("0.9"))]:
    add("hurwitz", s, 0, x, zeta(mpc(s), x))

print("// Generated by tests/oracles/gen_fixtures.py (mpmath, 40 digits). Do not edit.")
print("#pragma once\n")
print("namespace fixtures {\n")
print("struct Value {\n    const char* kind;\n    double s_re, s_im, a, c;\n    double re, im;\n};\n")
print("inline constexpr Value kValues[] = {")
for kind, sr, si, a, c, v in rows:
    print(f'    {{"{kind}", {sr!r}, {si!r}, {a!r}, {c!r}, {mp.nstr(v.real, 20)}, {mp.nstr(v.imag, 20)}}},')
print("};\n")
print("}  // namespace fixtures")
