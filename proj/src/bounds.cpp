#include "wrightcert/bounds.hpp"

namespace wrightcert {

namespace {

Interval three_pi_half_minus_one() {
    const Constants& C = Constants::get();
    return Interval(3) * C.pi_half - Interval(1);
}

// Row 2-norms of A01^{-1}: the alpha / omega amplification of a mode-1 bound.
Interval row_alpha_norm() {
    const ABlocks& B = ABlocks::get();
    return sqrt(sqr(B.A01_inv[0][0]) + sqr(B.A01_inv[0][1]));
}
Interval row_omega_norm() {
    const ABlocks& B = ABlocks::get();
    return sqrt(sqr(B.A01_inv[1][0]) + sqr(B.A01_inv[1][1]));
}

// The residual bound is assembled from two nonnegative 6x4 matrices acting on
// (f_1..f_4): rows are (alpha, omega, modes 2..5). m0 realizes |A_0^{-1}|, m1
// realizes |A_0^{-1} A_1 A_0^{-1}| with per-entry moduli of the composed
// blocks; the (mode 2 <- mode 1) entry goes through R^2 and uses the 2-norm
// of A12 A01^{-1}.
struct YMatrices {
    std::array<std::array<Interval, 4>, 6> m0{}, m1{};
};

const YMatrices& y_matrices() {
    static const YMatrices ym = [] {
        const Constants& C = Constants::get();
        const ABlocks& B = ABlocks::get();
        YMatrices y;
        Interval ra = row_alpha_norm(), rw = row_omega_norm();
        y.m0[0][0] = ra;
        y.m0[1][0] = rw;
        for (int k = 2; k <= 4; ++k) y.m0[k][k - 1] = a0star_inv_modulus(k);

        // mode 1 output of A_1 A_0^{-1} comes from the down-shift of mode 2
        Interval c12 = C.pi_half * cabs(lshift_minus_coef(2)) * a0star_inv_modulus(2);
        y.m1[0][1] = ra * c12;
        y.m1[1][1] = rw * c12;
        y.m1[2][0] = a0star_inv_modulus(2) * mat2_norm(mat2_mul(B.A12, B.A01_inv));
        y.m1[2][2] = a0star_inv_modulus(2) * C.pi_half * cabs(lshift_minus_coef(3)) *
                     a0star_inv_modulus(3);
        y.m1[3][1] = a0star_inv_modulus(3) * C.pi_half * cabs(lshift_plus_coef(2)) *
                     a0star_inv_modulus(2);
        y.m1[3][3] = a0star_inv_modulus(3) * C.pi_half * cabs(lshift_minus_coef(4)) *
                     a0star_inv_modulus(4);
        // the up-shift coefficient -i + (-i)^3 vanishes, so row 4 is empty
        y.m1[5][3] = a0star_inv_modulus(5) * C.pi_half * cabs(lshift_plus_coef(4)) *
                     a0star_inv_modulus(4);
        return y;
    }();
    return ym;
}

} // namespace

Deltas Deltas::at(const Interval& eps, const UBVec& r) {
    const Constants& C = Constants::get();
    Deltas d;
    Interval e2 = sqr(eps);
    d.da0 = e2 / Interval(5) * three_pi_half_minus_one();
    d.dw0 = e2 / Interval(5);
    d.dc0 = Interval(2) * eps / C.sqrt5;
    d.da = d.da0 + r.a;
    d.dw = d.dw0 + r.w;
    d.dc = d.dc0 + r.c;
    return d;
}

XBar xbar(const Interval& eps) {
    const Constants& C = Constants::get();
    Deltas d = Deltas::at(eps, UBVec{});
    XBar x;
    x.alpha = C.pi_half + d.da0;
    x.omega = C.pi_half - d.dw0;
    Interval fifth = Interval(1) / Interval(5);
    CInterval c2(Interval(2) * fifth * eps, -(fifth * eps));
    if (!(eps.lo == 0 && eps.hi == 0)) x.c.set(2, c2);
    return x;
}

std::array<Interval, 4> residual_f(const Interval& eps) {
    const Constants& C = Constants::get();
    Deltas d = Deltas::at(eps, UBVec{});
    Interval half(0.5);

    Interval f1 = C.pi_half * (half * sqr(d.dw0) + sqr(d.dw0) * d.dw0 / Interval(6)) +
                  d.da0 * d.dw0 + d.da0 * eps * d.dc0 +
                  Interval(3) * C.pi / Interval(4) * d.dw0 * eps * d.dc0;

    Interval f2 = (C.pi_half + d.da0) * d.dw0 * (d.dc0 + eps) +
                  half * d.dc0 * (Interval(2) * d.dw0 + d.da0) + eps * d.da0;

    // |F_3(xbar)| = |alpha| eps^2 (1/sqrt5) |i + e^{i dw0}|, and
    // |i + e^{it}| = sqrt(2 + 2 sin t) <= sqrt(2) + t for t >= 0.
    Interval f3 = half * (C.pi_half + d.da0) * (C.sqrt2 + d.dw0) * eps * d.dc0;

    Interval f4 = (C.pi_half + d.da0) / Interval(5) * sqr(eps) * eps;

    return {nonneg(f1), nonneg(f2), nonneg(f3), nonneg(f4)};
}

UBVec Y_bound(const Interval& eps) {
    const YMatrices& ym = y_matrices();
    std::array<Interval, 4> f = residual_f(eps);
    std::array<Interval, 6> yhat{};
    for (int row = 0; row < 6; ++row) {
        Interval s(0.0);
        for (int col = 0; col < 4; ++col)
            s += (ym.m0[row][col] + eps * ym.m1[row][col]) * f[col];
        yhat[row] = s;
    }
    UBVec y;
    y.a = nonneg(yhat[0]);
    y.w = nonneg(yhat[1]);
    y.c = nonneg(Interval(2) * (yhat[2] + yhat[3] + yhat[4] + yhat[5]));
    return y;
}

UBMat Z_bound(const Interval& eps, const UBVec& r, const Interval& rho) {
    const Constants& C = Constants::get();
    Deltas d = Deltas::at(eps, r);
    Interval half(0.5);

    Interval f1a = d.dw + eps * d.dc * (Interval(2) + d.dc) * half;
    Interval f1w = d.da + C.pi_half * d.dw +
                   (C.pi_half + d.da) * (eps * d.dc * half) * (Interval(3) + rho);
    Interval f1c = eps * (d.da + Interval(3) * C.pi / Interval(4) * d.dw + (C.pi_half + d.da) * d.dc);

    Interval inv_pisqrt5 = Interval(2) / (C.pi * C.sqrt5);
    Interval fsa = inv_pisqrt5 *
                   (r.c + Interval(2) * d.dw * (d.dc0 + eps) + eps * d.dc * (Interval(4) + d.dc));

    Interval fsw = Interval(5) / (Interval(2) * C.pi) * (Interval(1) + C.pi_half) * r.c +
                   Interval(2) / C.sqrt5 * eps *
                       ((Interval(1) + Interval(4) / C.sqrt5) * d.dw + Interval(2) / C.pi * d.da) +
                   Interval(5) / (Interval(2) * C.pi) * d.da * (r.c + d.dc) +
                   Interval(2) / C.pi * eps * (C.pi_half + d.da) *
                       ((d.dc + r.c) / C.sqrt5 +
                        Interval(5) / Interval(4) * (d.dc + Interval(3) / Interval(2) * r.c) +
                        rho * d.dc / C.sqrt5);

    Interval fsc = Interval(5) / Interval(2) * (half + Interval(1) / C.pi) * d.dw + d.da / C.sqrt5 +
                   eps * (Interval(8) / (C.pi * C.sqrt5) * d.da +
                          (Interval(2) / C.sqrt5 + Interval(25) / Interval(8)) * d.dw +
                          Interval(4) * (C.pi_half + d.da) * d.dc / (C.pi * C.sqrt5));

    Interval ra = row_alpha_norm(), rw = row_omega_norm();
    UBMat M;
    M.at(0, 0) = ra * f1a;
    M.at(0, 1) = ra * f1w;
    M.at(0, 2) = ra * f1c;
    M.at(1, 0) = rw * f1a;
    M.at(1, 1) = rw * f1w;
    M.at(1, 2) = rw * f1c;
    M.at(2, 0) = fsa;
    M.at(2, 1) = fsw;
    M.at(2, 2) = fsc;

    UBMat A = ub_A0inv_A1();
    UBMat Z = ub_mat_add(ub_scale(sqr(eps), ub_mat_mul(A, A)),
                         ub_mat_mul(ub_mat_add(ub_identity(), ub_scale(eps, A)), M));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) Z.at(i, j) = nonneg(Z.at(i, j));
    return Z;
}

Interval C_rho(const Interval& eps, const UBVec& r) {
    const Constants& C = Constants::get();
    Deltas d = Deltas::at(eps, r);
    UBMat A = ub_A0inv_A1();

    Interval row0 = Interval(8) / Interval(5);
    Interval row1 = Interval(2) / Interval(5) *
                    sqrt(Interval(16) + Interval(8) * C.pi + Interval(5) * sqr(C.pi));
    Interval row2 = Interval(5) * C.pi / Interval(2);
    // row * A * [0, 0, dc]^T
    Interval col = row0 * A.at(0, 2) + row1 * A.at(1, 2) + row2 * A.at(2, 2);
    Interval C0 = Interval(2) * sqr(eps) / C.pi * col * d.dc;

    Interval C1 = Interval(5) / (Interval(2) * C.pi) + eps * C.sqrt10 / C.pi;
    Interval C2 = d.dw * ((Interval(1) + C.pi_half) + eps * C.pi);
    Interval C3 = d.da * (Interval(2) + d.dc) + Interval(2) * d.dw * (Interval(1) + C.pi_half) +
                  eps * (C.pi + Interval(2) * d.da + Interval(4) * d.dc * d.da +
                         C.pi * d.dw * d.dc + (C.pi_half + d.da) * sqr(d.dc));

    Interval c1c2 = C1 * C2;
    if (!(c1c2.hi < 1.0))
        throw InvalidRegimeError("endomorphism constant undefined: C1*C2 >= 1");
    return (C0 + C1 * C3) / (Interval(1) - c1c2);
}

std::array<Interval, 3> radii_polynomials(const Interval& eps, const UBVec& r,
                                          const Interval& rho) {
    UBVec Y = Y_bound(eps);
    UBVec Zr = ub_mat_vec(Z_bound(eps, r, rho), r);
    return {Y.a - r.a + Zr.a, Y.w - r.w + Zr.w, Y.c - r.c + Zr.c};
}

ContractionReport check_contraction(const BallSpec& spec, bool scaled, const std::string& label) {
    const Constants& C = Constants::get();
    ContractionReport rep;
    Interval eps = spec.eps;
    UBVec r = spec.r;
    if (scaled) {
        Interval e2 = sqr(eps);
        r = UBVec{e2 * spec.r.a, e2 * spec.r.w, e2 * spec.r.c};
    }

    Interval inj_limit = C.sqrt10 / Interval(4);
    rep.checks.push_back(make_check(label + "/eps-below-sqrt10-over-4", "eps0 < sqrt(10)/4",
                                    eps.hi < inj_limit.lo, eps, inj_limit,
                                    "approximate-inverse-injectivity"));

    bool radii_positive = r.a.lo > 0 && r.w.lo > 0 && r.c.lo > 0;
    rep.checks.push_back(make_check(label + "/radii-positive", "r > 0 componentwise",
                                    radii_positive, Interval(r.a.lo, r.c.hi), Interval(0.0),
                                    "ball-radii"));

    bool endo_ok = false;
    Interval Cv(0.0);
    try {
        Cv = C_rho(eps, r);
        endo_ok = Cv.hi <= spec.rho.lo;
    } catch (const InvalidRegimeError&) {
        endo_ok = false;
    }
    rep.checks.push_back(make_check(label + "/endomorphism", "C(eps0, r) <= rho", endo_ok, Cv,
                                    spec.rho, "k-inverse-weighted-endomorphism"));

    rep.Z = Z_bound(eps, r, spec.rho);
    UBVec Y = Y_bound(eps);
    UBVec Zr = ub_mat_vec(rep.Z, r);
    std::array<Interval, 3> P = {Y.a - r.a + Zr.a, Y.w - r.w + Zr.w, Y.c - r.c + Zr.c};
    const char* comp[3] = {"alpha", "omega", "c"};
    for (int i = 0; i < 3; ++i) {
        bool neg = certainly_negative(P[i]);
        rep.checks.push_back(make_check(label + "/radii-poly-" + comp[i],
                                        std::string("P_") + comp[i] + "(eps0, r, rho) < 0", neg,
                                        P[i], Interval(0.0), "radii-polynomial-negativity"));
    }

    if (radii_positive) {
        rep.kappa = imax(imax(Zr.a / r.a, Zr.w / r.w), Zr.c / r.c);
        rep.checks.push_back(make_check(label + "/contraction-rate",
                                        "kappa = max_i (Z r)_i / r_i < 1", rep.kappa.hi < 1.0,
                                        rep.kappa, Interval(1.0), "contraction-rate"));
    } else {
        rep.kappa = Interval(std::numeric_limits<double>::infinity());
    }

    if (scaled) {
        // rbar_alpha < (1/5)(3 pi/2 - 1) pins the branch strictly above pi/2
        Interval slope = three_pi_half_minus_one() / Interval(5);
        rep.checks.push_back(make_check(label + "/alpha-above-critical",
                                        "rbar_alpha < (1/5)(3 pi/2 - 1)",
                                        spec.r.a.hi < slope.lo, spec.r.a, slope,
                                        "branch-stays-supercritical"));
    }

    rep.passed = true;
    for (const auto& c : rep.checks) rep.passed = rep.passed && c.passed;
    return rep;
}

BallSpec ParamCase::ball() const {
    return BallSpec{Interval(eps0), UBVec{Interval(r[0]), Interval(r[1]), Interval(r[2])},
                    Interval(rho)};
}

ParamTable ParamTable::builtin() {
    ParamTable t;
    t.version = "builtin-1";
    t.bigbox_a = {"contraction-a", 0.029, {0.13, 0.17, 0.17}, 1.78, false};
    t.bigbox_b = {"contraction-b", 0.09, {0.1753, 0.0941, 0.3829}, 1.5940, false};
    t.tight = {"tight", 0.10, {0.0594, 0.0260, 0.4929}, 0.3191, true};
    return t;
}

} // namespace wrightcert
