#include "lerchlab/eigenspace.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "lerchlab/em_sum.hpp"
#include "lerchlab/errors.hpp"
#include "lerchlab/kernels.hpp"
#include "lerchlab/quadrature.hpp"

namespace lerchlab {

using detail::expi2pi;

namespace {

constexpr int kGradeLevels = 40;
constexpr int kPanelOrder = 64;
// Graded panels shorter than this carry at most a few oscillations of the
// highest harmonic and get a 24-point rule.
constexpr double kNarrowPanel = 1.0 / 24;
constexpr int kNarrowOrder = 24;

// Interior points, away from every lattice line with denominator <= 3.
constexpr Point kTestPoints[] = {{0.23, 0.41}, {0.67, 0.19}, {0.38, 0.77}, {0.81, 0.58}, {0.12, 0.88},
                                 {0.55, 0.29}, {0.91, 0.09}, {0.44, 0.62}, {0.29, 0.14}, {0.73, 0.86}};

// Slice positions, chosen so that 2x and 3x stay 0.05 clear of the integers.
constexpr double kSlices[] = {0.22, 0.36, 0.61, 0.83};

cplx pos_pow(double x, cplx s) { return std::exp(s * std::log(x)); }

double rel(cplx x, cplx ref) { return std::abs(x - ref) / (1.0 + std::abs(ref)); }

void check_twisted(const TwistedFn& F, double tol) {
    for (const Point& p : kTestPoints) {
        const cplx f = F(p.a, p.c);
        const double r1 = rel(F(p.a + 1.0, p.c), f);
        const double r2 = rel(F(p.a, p.c + 1.0), expi2pi(-p.a) * f);
        if (!(r1 <= tol && r2 <= tol))
            throw IdentityViolation("characterize: " + F.label() + " is not twisted-periodic (residual " +
                                    std::to_string(std::max(r1, r2)) + ")");
    }
}

}  // namespace

const char* to_string(BasisMember m) {
    switch (m) {
        case BasisMember::L_plus: return "L+";
        case BasisMember::L_minus: return "L-";
        case BasisMember::R_plus: return "R+";
        case BasisMember::R_minus: return "R-";
    }
    return "?";
}

EigenBasis build_eigenspace(cplx s, const StrategyConfig& cfg) {
    EigenBasis b;
    b.s = s;
    b.span = {L_fn(s, Parity::plus, cfg), L_fn(s, Parity::minus, cfg), R_fn(s, Parity::plus, cfg),
              R_fn(s, Parity::minus, cfg)};
    b.vanishes = {L_vanishes(s, Parity::plus), L_vanishes(s, Parity::minus), R_vanishes(s, Parity::plus),
                  R_vanishes(s, Parity::minus)};
    if (s.real() > 0.0)
        b.active_pair = {BasisMember::L_plus, BasisMember::L_minus};
    else
        b.active_pair = {BasisMember::R_plus, BasisMember::R_minus};
    return b;
}

std::pair<TwistedFn, TwistedFn> j_split(const EigenBasis& basis) {
    const auto [first, second] = basis.active_pair;
    if (basis.vanishes[std::size_t(first)] || basis.vanishes[std::size_t(second)])
        throw DegenerateError("j_split: an active basis member vanishes identically");
    // Within each pair the first member is the J-even one.
    const TwistedFn& Fp = basis[first];
    const TwistedFn& Fm = basis[second];
    const TwistedFn JFp = apply_R(Fp, 2), JFm = apply_R(Fm, 2);
    for (const Point& p : kTestPoints) {
        const cplx fp = Fp(p.a, p.c), fm = Fm(p.a, p.c);
        if (rel(JFp(p.a, p.c), fp) > 1e-10 || rel(JFm(p.a, p.c), -fm) > 1e-10)
            throw IdentityViolation("j_split: J-eigenvalue check failed");
    }
    return {Fp, Fm};
}

cplx FourierSlice::at(int n) const {
    const auto it = coefficients.find(n);
    if (it == coefficients.end()) throw DomainError("FourierSlice: index outside the computed range");
    return it->second;
}

FourierSlice fourier_slice(const TwistedFn& F, Axis axis, double fixed_coord, int N) {
    if (N < 0) throw DomainError("fourier_slice: N must be non-negative");
    const int d = F.denominator();
    if (lattice_distance(fixed_coord, d) < 1e-13)
        throw GridPointError("fourier_slice: fixed coordinate on the discontinuity lattice");

    std::vector<double> breaks;
    for (int j = 0; j <= d; ++j) breaks.push_back(double(j) / d);
    const auto panels = graded_panels(breaks, kGradeLevels);
    const auto nodes = line_nodes(panels, kPanelOrder, kNarrowOrder, kNarrowPanel);

    std::vector<double> xs(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) xs[i] = nodes[i].x;
    std::vector<cplx> vals(nodes.size());
    LineFn f;
    if (axis == Axis::a_axis) {
        f = [&F, fixed_coord](double a) { return F.eval(a, fixed_coord); };
    } else {
        f = [&F, fixed_coord](double c) { return expi2pi(fixed_coord * c) * F.eval(fixed_coord, c); };
    }
    kernels::evaluate_line_parallel(f, xs, vals);

    FourierSlice out;
    out.axis = axis;
    out.fixed_coord = fixed_coord;
    out.n_min = -N;
    out.n_max = N;
    std::vector<cplx> pos(N + 1), neg(N + 1);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const cplx base = nodes[i].w * vals[i];
        const cplx z = expi2pi(-xs[i]);
        cplx zn = 1.0;
        for (int n = 0; n <= N; ++n) {
            pos[n] += base * zn;
            neg[n] += base * std::conj(zn);
            zn *= z;
        }
    }
    for (int n = 0; n <= N; ++n) {
        out.coefficients[n] = pos[n];
        if (n > 0) out.coefficients[-n] = neg[n];
    }
    double head = 0.0, tail = 0.0;
    for (const auto& [n, v] : out.coefficients) {
        double& bucket = 2 * std::abs(n) < N ? head : tail;
        bucket = std::max(bucket, std::abs(v));
    }
    out.decaying = N < 4 || tail <= head;
    return out;
}

CharacterizationResult characterize(const TwistedFn& F, cplx s, CharPath path, int N, double tolerance) {
    if (path == CharPath::a_path && !(s.real() > 0.0)) throw DomainError("characterize: a-path needs Re s > 0");
    if (path == CharPath::c_path && !(s.real() < 1.0)) throw DomainError("characterize: c-path needs Re s < 1");
    if (N < 4) throw DomainError("characterize: N must be at least 4");
    check_twisted(F, tolerance);

    const Axis axis = path == CharPath::a_path ? Axis::a_axis : Axis::c_axis;
    std::vector<FourierSlice> slices;
    for (double x : kSlices) {
        slices.push_back(fourier_slice(F, axis, x, N));
        if (!slices.back().decaying)
            throw IdentityViolation("characterize: Fourier coefficients of " + F.label() + " do not decay");
    }

    // Normalized coefficients and the two side constants.
    // a-path: ftilde_n(c) = |n+c|^s f_n(c), A from n + c > 0, B from n + c < 0.
    // c-path: gtilde_n(a) = |a-n|^{1-s} g_n(a), A from a > n, B from a < n.
    const cplx expo = path == CharPath::a_path ? s : 1.0 - s;
    auto normalized = [&](const FourierSlice& sl, int n) {
        const double x = path == CharPath::a_path ? n + sl.fixed_coord : sl.fixed_coord - n;
        return std::pair{pos_pow(std::abs(x), expo) * sl.at(n), x > 0.0};
    };
    cplx sumA{}, sumB{};
    int nA = 0, nB = 0;
    for (const auto& sl : slices) {
        for (int n = -N; n <= N; ++n) {
            const auto [v, a_side] = normalized(sl, n);
            if (a_side) {
                sumA += v;
                ++nA;
            } else {
                sumB += v;
                ++nB;
            }
        }
    }
    CharacterizationResult r;
    r.A = sumA / double(nA);
    r.B = sumB / double(nB);
    for (const auto& sl : slices) {
        for (int n = -N; n <= N; ++n) {
            const auto [v, a_side] = normalized(sl, n);
            r.spread = std::max(r.spread, std::abs(v - (a_side ? r.A : r.B)));
        }
    }
    const double scale = 1.0 + std::abs(r.A) + std::abs(r.B);
    if (!(r.spread <= tolerance * scale))
        throw IdentityViolation("characterize: normalized coefficients of " + F.label() +
                                " are not piecewise constant (spread " + std::to_string(r.spread) + ")");

    // Hecke coefficient identities on a subset of slices.
    for (int m : {2, 3}) {
        const int count = path == CharPath::a_path ? (m == 2 ? 2 : 1) : 1;
        for (int i = 0; i < count; ++i) {
            const double x = kSlices[i];
            if (path == CharPath::a_path) {
                // f_{mn}(mc) = m^{-s} f_n(c)
                const FourierSlice big = fourier_slice(F, Axis::a_axis, m * x, N);
                for (int n = -N / m; n <= N / m; ++n) {
                    const double w = std::pow(std::abs(n + x), s.real()) * std::pow(double(m), s.real());
                    const cplx diff = big.at(m * n) - pos_pow(m, -s) * slices[i].at(n);
                    r.hecke_residual = std::max(r.hecke_residual, std::abs(diff) * w / scale);
                }
            } else {
                // g_{mn-k}(a) = m^{s-1} g_n((a+k)/m)
                for (int k = 0; k < m; ++k) {
                    const FourierSlice small = fourier_slice(F, Axis::c_axis, (x + k) / m, N);
                    for (int n = -N / m + 1; n <= N / m; ++n) {
                        const double w = std::pow(std::abs(x - (m * n - k)), 1.0 - s.real());
                        const cplx diff = slices[i].at(m * n - k) - pos_pow(m, s - 1.0) * small.at(n);
                        r.hecke_residual = std::max(r.hecke_residual, std::abs(diff) * w / scale);
                    }
                }
            }
        }
    }
    if (!(r.hecke_residual <= tolerance))
        throw IdentityViolation("characterize: Hecke coefficient identity fails for " + F.label() + " (residual " +
                                std::to_string(r.hecke_residual) + ")");

    const cplx kp = 0.5 * (r.A + r.B), km = 0.5 * (r.A - r.B);
    if (path == CharPath::a_path)
        r.matched = linear_combination(kp, L_fn(s, Parity::plus), km, L_fn(s, Parity::minus));
    else
        r.matched = linear_combination(kp, R_fn(s, Parity::plus), km, R_fn(s, Parity::minus));
    for (const Point& p : kTestPoints) r.residual = std::max(r.residual, std::abs(F(p.a, p.c) - r.matched(p.a, p.c)));
    return r;
}

GramAnalysis gram_analysis(const EigenBasis& basis, int grid) {
    if (grid < 2) throw DomainError("gram_analysis: grid too small");
    std::vector<Point> pts;
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j) pts.push_back({(i + 0.37) / grid, (j + 0.61) / grid});
    const Eigen::Index P = Eigen::Index(pts.size());
    Eigen::MatrixXcd M(P, 4);
    std::vector<cplx> col(pts.size());
    for (int k = 0; k < 4; ++k) {
        kernels::evaluate_parallel(basis.span[k], pts, col);
        for (Eigen::Index i = 0; i < P; ++i) M(i, k) = col[i];
        const double nrm = M.col(k).norm();
        if (nrm > 0.0) M.col(k) /= nrm;
    }
    const Eigen::Matrix4cd G = M.adjoint() * M;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(G, Eigen::EigenvaluesOnly);
    GramAnalysis out;
    for (int k = 0; k < 4; ++k) out.singular_values[k] = std::abs(es.eigenvalues()[3 - k]);
    const double top = out.singular_values[0];
    for (double v : out.singular_values)
        if (v > 1e-10 * top) ++out.rank;
    out.gap = out.singular_values[1] / std::max(out.singular_values[2], 1e-300);
    return out;
}

}  // namespace lerchlab
