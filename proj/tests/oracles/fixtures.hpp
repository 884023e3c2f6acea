// Generated by tests/oracles/gen_fixtures.py (mpmath, 40 digits). Do not edit.
#pragma once

namespace fixtures {

struct Value {
    const char* kind;
    double s_re, s_im, a, c;
    double re, im;
};

inline constexpr Value kValues[] = {
    {"gamma", 2.0, 3.0, 0.0, 0.0, -0.082395272665611883674, 0.091774287435259314596},
    {"gamma", 0.3, -4.2, 0.0, 0.0, 0.00013452432440323661409, -0.0025634599330710986762},
    {"gamma", -2.5, 0.5, 0.0, 0.0, -0.3338752035224323374, -0.20645730796360841492},
    {"gamma", 10.5, 20.0, 0.0, 0.0, -0.84402295270177025793, 0.16043283204864407647},
    {"gamma", -7.3, 0.0, 0.0, 0.0, 0.00041838787301354769898, 0.0},
    {"gamma", 40.0, 10.0, 0.0, 0.0, 3.929480492436020765e+45, -4.305495236135942675e+45},
    {"gamma", 0.001, 0.002, 0.0, 0.0, 199.42377610273892897, -399.99802551986557445},
    {"tate_plus", 2.0, 0.0, 0.0, 0.0, -0.050660591821168885722, 0.0},
    {"tate_minus", 0.3, 0.7, 0.0, 0.0, 0.094963036606270136701, -1.4771857878526150598},
    {"tate_plus", -1.5, 0.0, 0.0, 0.0, -52.637890139143245967, 0.0},
    {"tate_plus", 0.5, 14.0, 0.0, 0.0, -0.91132517990411677546, 0.41168727995012087053},
    {"tate_minus", 2.5, -3.0, 0.0, 0.0, 0.084928980587788063909, -0.24404109163202343293},
    {"zeta", 3.0, 0.0, 0.3333333333333333, 0.5, 7.8370270231168523659, 0.20643842913792822686},
    {"zeta", 0.5, 0.0, 0.3333333333333333, 0.25, 1.5239083441335400744, 0.35413350264101506749},
    {"zeta", 0.9, 14.1, 0.41, 0.37, -0.37915254736870006748, 1.9888063854964172686},
    {"zeta", -0.4, 3.0, 0.2, 0.9, 5.1549985246738470091, 0.80341310189998265338},
    {"zeta", -3.5, 2.0, 0.3, 0.6, -3.4134430064562461443, -9.0018337082037227622},
    {"zeta", 0.5, 20.0, 0.05, 0.3, 3.9506333267137032479, 1.6410375361913664544},
    {"zeta", 1.2, -7.0, 0.97, 0.02, -67.767634211468534915, -85.733578543254195665},
    {"zeta", -2.5, 0.0, 0.75, 2.3, -0.15090535886127513987, -2.5661117766101573091},
    {"zeta", 4.0, 1.0, 0.1, 0.001, 811214652840.57446283, 584748481844.02771968},
    {"zeta", 0.7, 0.0, 0.5, 0.5, 1.1699057167957836838, 1.1690586149297614002e-43},
    {"zeta_star", 2.0, 0.0, 0.25, -0.75, -0.56963645738435489257, 15.841269144117418165},
    {"zeta_star", 0.7, 0.0, 0.6, 3.2, 1.0066757662627308313, 2.3655635428435022506},
    {"zeta_star", -1.5, 1.0, 0.35, -1.4, 0.49758700930736184584, 0.46827196279155822642},
    {"L_plus", 2.0, 0.0, 0.3333333333333333, 0.5, 1.6449340668482264365, -2.8491093788820281858},
    {"L_minus", 2.0, 0.0, 0.3333333333333333, 0.5, 5.8597680967236472265, 3.3831386880321787501},
    {"L_plus", -1.5, 0.0, 0.3, 0.6, -0.12827569812261217833, 0.31810827268131891889},
    {"L_minus", -1.5, 0.0, 0.3, 0.6, -0.36275956402387585481, -0.20142039510669672495},
    {"L_plus", 0.5, 3.0, 0.25, 0.7, 0.60483822288353663934, 3.7215180644732912026},
    {"L_minus", 0.5, 3.0, 0.25, 0.7, 3.1516926475841349869, -0.14282071894994577765},
    {"L_plus", -4.2, 6.0, 0.8, 0.15, 3919.2603585022124796, -3451.6879849547231739},
    {"L_minus", -4.2, 6.0, 0.8, 0.15, -3912.0875932495831598, 3454.3737275817742203},
    {"hurwitz", -1.5, 0.0, 0.0, 0.3, -0.0081855604858359745025, 0.0},
    {"hurwitz", 0.5, 0.0, 0.0, 0.7, -1.0105365599351245205, 0.0},
    {"hurwitz", 1.5, -3.0, 0.0, 0.125, 23.107695211973247131, 1.3556554341106993588},
    {"hurwitz", -6.5, 0.0, 0.0, 0.9, 0.0038338967998311025543, 0.0},
};

}  // namespace fixtures
