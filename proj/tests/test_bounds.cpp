#include "doctest.h"

#include <random>

#include "wrightcert/bounds.hpp"
#include "wrightcert/oracle.hpp"

using namespace wrightcert;

namespace {

// F(xbar_eps) assembled directly from the defining formulas, as a rigorous
// enclosure; modes >= 5 vanish.
FourierVector F_at_xbar(const Interval& eps) {
    XBar x = xbar(eps);
    CInterval emiw = cexp_minus_i_omega(x.omega);
    CInterval epiw = conj(emiw);
    CInterval emi2w = cexp_minus_i_omega(Interval(2) * x.omega);
    CInterval c2 = x.c.at(2);
    CInterval alpha(x.alpha, Interval(0.0));
    CInterval ieps_omega(Interval(0.0), x.omega);

    FourierVector F;
    F.set(1, ieps_omega + alpha * emiw + (eps * (alpha * c2)) * (epiw + emi2w));
    F.set(2, (CInterval(Interval(0.0), Interval(2) * x.omega) + alpha * emi2w) * c2 +
                 eps * (alpha * emiw));
    F.set(3, (eps * (alpha * c2)) * (emiw + emi2w));
    F.set(4, (eps * alpha) * (emi2w * (c2 * c2)));
    return F;
}

UBVec norm_triple(const TripleVector& t) {
    return UBVec{abs(t.alpha), abs(t.omega), norm(t.modes)};
}

} // namespace

TEST_CASE("approximate solution curve") {
    const Constants& C = Constants::get();
    XBar x0 = xbar(Interval(0.0));
    CHECK(intersects(x0.alpha, C.pi_half));
    CHECK(intersects(x0.omega, C.pi_half));
    CHECK(x0.c.empty());

    XBar x = xbar(Interval(0.1));
    Interval da = x.alpha - C.pi_half;
    Interval expect = Interval(0.002) * (Interval(3) * C.pi_half - Interval(1));
    CHECK(intersects(da, expect));
    CHECK(da.lo > 0.0074247);
    CHECK(da.hi < 0.0074248);
    Interval dw = C.pi_half - x.omega;
    CHECK(dw.lo <= 0.002);
    CHECK(dw.hi >= 0.002);
    CHECK(intersects(norm(x.c), Interval(0.2) / C.sqrt5));
}

TEST_CASE("residual majorants") {
    auto f0 = residual_f(Interval(0.0));
    for (const auto& fi : f0) {
        CHECK(fi.lo == 0.0);
        CHECK(fi.hi == 0.0);
    }

    // f4(0.1) = (1/5)(pi/2 + da0) 1e-3
    Interval eps(0.1);
    auto f = residual_f(eps);
    Deltas d = Deltas::at(eps, UBVec{});
    Interval expect = (Constants::get().pi_half + d.da0) / Interval(5) * Interval(0.001);
    CHECK(intersects(f[3], expect));

    // each f_i dominates the actual residual component at the center
    for (double e : {0.02, 0.05, 0.1}) {
        auto fi = residual_f(Interval(e));
        FourierVector F = F_at_xbar(Interval(e));
        for (int k = 1; k <= 4; ++k) CHECK(fi[k - 1].hi >= cabs(F.at(k)).lo);
        CHECK(F.at(5).re.contains(0.0));
    }
}

TEST_CASE("Y bound dominates the Newton residual and scales like eps^2") {
    UBVec y0 = Y_bound(Interval(0.0));
    CHECK(y0.a.hi == 0.0);
    CHECK(y0.w.hi == 0.0);
    CHECK(y0.c.hi == 0.0);

    for (double e : {0.02, 0.05, 0.1}) {
        Interval eps(e);
        UBVec y = Y_bound(eps);
        TripleVector adf = apply_Adagger(eps, F_at_xbar(eps));
        UBVec nt = norm_triple(adf);
        CHECK(y.a.hi >= nt.a.lo);
        CHECK(y.w.hi >= nt.w.lo);
        CHECK(y.c.hi >= nt.c.lo);
    }

    // eps^{-2} Y(eps) nondecreasing on a grid
    UBVec prev = Y_bound(Interval(0.01));
    Interval prev_e2 = sqr(Interval(0.01));
    for (double e : {0.02, 0.04, 0.06, 0.08, 0.1}) {
        UBVec cur = Y_bound(Interval(e));
        Interval e2 = sqr(Interval(e));
        CHECK(certainly_positive(cur.a / e2 - prev.a / prev_e2));
        CHECK(certainly_positive(cur.w / e2 - prev.w / prev_e2));
        CHECK(certainly_positive(cur.c / e2 - prev.c / prev_e2));
        prev = cur;
        prev_e2 = e2;
    }
}

TEST_CASE("Z bound structure and monotonicity") {
    UBVec zero{};
    UBMat z0 = Z_bound(Interval(0.0), zero, Interval(1.0));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(z0.at(i, j).hi == 0.0);

    UBVec rb{Interval(0.1753), Interval(0.0941), Interval(0.3829)};
    UBMat z5 = Z_bound(Interval(0.05), rb, Interval(1.5940));
    UBMat z9 = Z_bound(Interval(0.09), rb, Interval(1.5940));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(certainly_positive(z9.at(i, j) - z5.at(i, j)));
}

TEST_CASE("endomorphism constant") {
    CHECK(C_rho(Interval(0.0), UBVec{}).hi == 0.0);

    UBVec ra{Interval(0.13), Interval(0.17), Interval(0.17)};
    CHECK(le_threshold(C_rho(Interval(0.029), ra), 1.78));

    Interval e(0.1);
    UBVec rt{sqr(e) * Interval(0.0594), sqr(e) * Interval(0.0260), sqr(e) * Interval(0.4929)};
    CHECK(le_threshold(C_rho(e, rt), 0.3191));

    // huge omega-radius pushes C1*C2 past 1
    UBVec bad{Interval(0.1), Interval(0.6), Interval(0.1)};
    CHECK_THROWS_AS(C_rho(Interval(0.1), bad), InvalidRegimeError);

    // monotone in eps and r
    Interval c_small = C_rho(Interval(0.02), rt);
    Interval c_big = C_rho(Interval(0.08), rt);
    CHECK(certainly_positive(c_big - c_small));
}

TEST_CASE("published contraction domains certify") {
    ParamTable t = ParamTable::builtin();

    ContractionReport a = check_contraction(t.bigbox_a.ball(), false, "contraction-a");
    CHECK(a.passed);
    CHECK(a.kappa.hi < 1.0);

    ContractionReport b = check_contraction(t.bigbox_b.ball(), false, "contraction-b");
    CHECK(b.passed);
    CHECK(b.kappa.hi < 1.0);
    CHECK(b.kappa.lo > 0.99); // this domain runs close to the contraction limit

    ContractionReport tt = check_contraction(t.tight.ball(), true, "tight");
    CHECK(tt.passed);
    CHECK(tt.kappa.hi < 0.45);

    // vanishing radii leave the residual undominated
    BallSpec small{Interval(0.09),
                   UBVec{Interval(1e-9), Interval(1e-9), Interval(1e-9)}, Interval(1.5940)};
    ContractionReport bad = check_contraction(small, false, "degenerate");
    CHECK_FALSE(bad.passed);
}

TEST_CASE("Z dominates the true derivative of T on sampled ball points") {
    // non-rigorous sanity shadow: DT(x) y = y - A^dagger DF(x) y evaluated in
    // plain float arithmetic must sit below the certified bound Z * L(y)
    using oracle::cplx;
    std::mt19937_64 rng(8642u);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);

    const double eps = 0.029;
    const double rr[3] = {0.13, 0.17, 0.17};
    const double rho = 1.78;
    UBVec rv{Interval(rr[0]), Interval(rr[1]), Interval(rr[2])};
    UBMat Z = Z_bound(Interval(eps), rv, Interval(rho));

    const int N = 12, n = 2 * N;
    for (int trial = 0; trial < 100; ++trial) {
        // x in B_eps(r, rho), perturbation on modes 2..6 (so the K^{-1}
        // constraint is satisfied automatically)
        oracle::TruncatedState x = oracle::approximate_state(eps, N);
        x.alpha += unit(rng) * rr[0];
        x.omega += unit(rng) * rr[1];
        std::vector<cplx> dc(5);
        double tot = 0.0;
        for (auto& v : dc) {
            v = cplx(unit(rng), unit(rng));
            tot += std::abs(v);
        }
        double scale = 0.999 * rr[2] / (2.0 * tot);
        for (int j = 0; j < 5; ++j) x.c[static_cast<size_t>(j)] += scale * dc[j];

        // direction y = (ya, yw, yc) with yc on modes 2..5
        double ya = unit(rng), yw = unit(rng);
        std::vector<cplx> yc(4);
        double ynorm = 0.0;
        for (auto& v : yc) {
            v = cplx(unit(rng), unit(rng));
            ynorm += std::abs(v);
        }
        ynorm *= 2.0;

        // DF(x) y through the oracle Jacobian
        std::vector<double> J = oracle::eval_DF(eps, x);
        std::vector<double> yvec(static_cast<size_t>(n), 0.0);
        yvec[0] = ya;
        yvec[1] = yw;
        for (int m = 2; m <= 5; ++m) {
            yvec[static_cast<size_t>(2 * (m - 1))] = yc[static_cast<size_t>(m - 2)].real();
            yvec[static_cast<size_t>(2 * (m - 1) + 1)] = yc[static_cast<size_t>(m - 2)].imag();
        }
        FourierVector dfy;
        for (int k = 1; k <= N; ++k) {
            double re = 0.0, im = 0.0;
            for (int j = 0; j < n; ++j) {
                re += J[static_cast<size_t>(2 * (k - 1)) * n + j] * yvec[static_cast<size_t>(j)];
                im += J[static_cast<size_t>(2 * (k - 1) + 1) * n + j] * yvec[static_cast<size_t>(j)];
            }
            if (re != 0.0 || im != 0.0) dfy.set(k, CInterval(Interval(re), Interval(im)));
        }

        TripleVector adfy = apply_Adagger(Interval(eps), dfy);
        double ta = std::fabs(ya - midpoint(adfy.alpha));
        double tw = std::fabs(yw - midpoint(adfy.omega));
        double tc = 0.0;
        for (int m = 2; m <= N + 1; ++m) {
            cplx yk = (m >= 2 && m <= 5) ? yc[static_cast<size_t>(m - 2)] : cplx(0.0, 0.0);
            cplx ak(midpoint(adfy.modes.at(m).re), midpoint(adfy.modes.at(m).im));
            tc += std::abs(yk - ak);
        }
        tc *= 2.0;

        UBVec ly{Interval(std::fabs(ya)), Interval(std::fabs(yw)), Interval(ynorm)};
        UBVec bound = ub_mat_vec(Z, ly);
        CHECK(ta <= bound.a.hi * (1 + 1e-9) + 1e-12);
        CHECK(tw <= bound.w.hi * (1 + 1e-9) + 1e-12);
        CHECK(tc <= bound.c.hi * (1 + 1e-9) + 1e-12);
    }
}

TEST_CASE("scaled comparison chain") {
    ParamTable t = ParamTable::builtin();
    Interval e0(t.tight.eps0);
    UBVec rbar{Interval(t.tight.r[0]), Interval(t.tight.r[1]), Interval(t.tight.r[2])};
    Interval rho(t.tight.rho);
    auto scaled_r = [&](const Interval& e) {
        Interval e2 = sqr(e);
        return UBVec{e2 * rbar.a, e2 * rbar.w, e2 * rbar.c};
    };
    auto P0 = radii_polynomials(e0, scaled_r(e0), rho);
    for (double e : {0.02, 0.05, 0.08}) {
        Interval ei(e);
        auto Pe = radii_polynomials(ei, scaled_r(ei), rho);
        Interval ratio = sqr(ei) / sqr(e0);
        for (int i = 0; i < 3; ++i) CHECK(Pe[i].hi <= (ratio * P0[i]).hi);
    }
}
