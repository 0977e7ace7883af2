#include "doctest.h"

#include <complex>
#include <random>

#include "wrightcert/globalchecks.hpp"

using namespace wrightcert;

namespace {

bool has_check(const Certificate& c, const std::string& name) {
    for (const auto& ch : c.checks)
        if (ch.name == name) return true;
    return false;
}

// dF/deps(x) = alpha e^{-i omega} e_2 + alpha L_omega c + alpha [U_omega c]*c
// in plain complex arithmetic, for x with modes supported on {2, 3}.
std::vector<std::complex<double>> dF_deps_float(double alpha, double omega,
                                                std::complex<double> c2,
                                                std::complex<double> c3) {
    using cplx = std::complex<double>;
    auto coef = [&](int k) -> cplx {
        if (k == 2) return c2;
        if (k == 3) return c3;
        if (k == -2) return std::conj(c2);
        if (k == -3) return std::conj(c3);
        return {0.0, 0.0};
    };
    auto ph = [&](int k) { return std::exp(cplx(0.0, -k * omega)); };
    std::vector<cplx> out(8, cplx(0.0, 0.0));
    for (int k = 1; k <= 8; ++k) {
        cplx v = (ph(1) + ph(k - 1)) * coef(k - 1) + (ph(-1) + ph(k + 1)) * coef(k + 1);
        cplx conv{0.0, 0.0};
        for (int k1 = -3; k1 <= 3; ++k1) conv += ph(k1) * coef(k1) * coef(k - k1);
        out[static_cast<size_t>(k - 1)] = alpha * (v + conv);
    }
    out[1] += alpha * ph(1);
    return out;
}

std::mt19937_64 rng(33445u);

} // namespace

TEST_CASE("fourier bound constants") {
    const Constants& C = Constants::get();
    FourierBoundConsts f = fourier_bound_consts(C.pi_half);
    CHECK(intersects(f.sup_coeff, Interval(2) / sqrt(Interval(3))));
    CHECK(intersects(f.l2_coeff, sqrt(Interval(1) / Interval(3))));

    // 1/omega homogeneity of the sup coefficient
    FourierBoundConsts g = fourier_bound_consts(Interval(2) * C.pi_half);
    CHECK(intersects(Interval(2) * g.sup_coeff, f.sup_coeff));

    CHECK_THROWS_AS(fourier_bound_consts(Interval(-1, 1)), DomainError);
}

TEST_CASE("omega window battery") {
    auto checks = check_omega_window();
    CHECK(checks.size() == 7);
    for (const auto& c : checks) CHECK(c.passed);

    // a point inside the excluded band violates the smallness inequality
    const Constants& C = Constants::get();
    Interval lhs = Interval(1.2) * sqrt(sqr(Interval(1.2) - C.pi_half) +
                                        Interval(2) * C.pi_half * Interval(1.2) *
                                            (Interval(1) - sin(Interval(1.2))));
    Interval rhs =
        Interval(2) * C.pi / sqrt(Interval(3)) * sqr(C.pi_half) * C.mu * (Interval(1) + C.mu);
    CHECK(certainly_positive(lhs - rhs));
}

TEST_CASE("implicit differentiation data") {
    ParamTable t = ParamTable::builtin();
    UBVec rbar{Interval(t.tight.r[0]), Interval(t.tight.r[1]), Interval(t.tight.r[2])};
    Interval rho(t.tight.rho);

    ImplicitData id = implicit_Q(Interval(0.1), rbar, rho);
    const Constants& C = Constants::get();
    Interval q0a = Interval(2) / Interval(5) * (Interval(3) * C.pi_half - Interval(1)) * Interval(0.1);
    CHECK(intersects(id.Q0.a, q0a));
    CHECK(id.Q0.a.lo > 0.1484);
    CHECK(id.Q0.a.hi < 0.1486);
    CHECK(id.kappa.hi < 1.0);
    CHECK(id.M_eps.lo > 0.0);
    CHECK(id.Mp_eps.lo > 0.0);
    CHECK(id.fhat1.lo >= 0.0);

    // Gamma has exactly three modes, e_2 entry -i pi/2
    CHECK(id.Gamma_eps.coeffs().size() == 3);
    CHECK(id.Gamma_eps.at(2).im.contains(-C.pi_half));

    // the fhat corrections vanish with eps (every term carries a Delta or r
    // factor); eps = 0 itself is rejected because M is eps^{-2}-normalized
    ImplicitData z = implicit_Q(Interval(1e-8), rbar, rho);
    CHECK(z.fhat1.hi < 1e-15);
    CHECK(z.fhatc.hi < 1e-15);
    CHECK_THROWS_AS(implicit_Q(Interval(0.0), rbar, rho), DomainError);
}

TEST_CASE("Gamma approximates dF/deps to second order") {
    for (double e : {0.01, 0.05, 0.1}) {
        XBar x = xbar(Interval(e));
        double alpha = midpoint(x.alpha), omega = midpoint(x.omega);
        std::complex<double> c2(midpoint(x.c.at(2).re), midpoint(x.c.at(2).im));
        auto df = dF_deps_float(alpha, omega, c2, {0.0, 0.0});
        FourierVector g = gamma_eps(Interval(e));
        // componentwise difference, norm-triple style
        double dn = 0.0;
        for (int k = 1; k <= 8; ++k) {
            std::complex<double> gk(midpoint(g.at(k).re), midpoint(g.at(k).im));
            dn += std::abs(df[static_cast<size_t>(k - 1)] - gk);
        }
        CHECK(2.0 * dn / (e * e) < 10.0); // O(eps^2) with a modest constant
    }
}

TEST_CASE("Q dominates A^dagger dF/deps on sampled ball points") {
    ParamTable t = ParamTable::builtin();
    UBVec rbar{Interval(t.tight.r[0]), Interval(t.tight.r[1]), Interval(t.tight.r[2])};
    Interval rho(t.tight.rho);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);

    for (double e : {0.05, 0.1}) {
        ImplicitData id = implicit_Q(Interval(e), rbar, rho);
        for (int trial = 0; trial < 25; ++trial) {
            // sample x in B_eps(eps^2 rbar, rho) with c supported on {2, 3}
            XBar xb = xbar(Interval(e));
            double e2 = e * e;
            double alpha = midpoint(xb.alpha) + unit(rng) * e2 * t.tight.r[0];
            double omega = midpoint(xb.omega) + unit(rng) * e2 * t.tight.r[1];
            double rc = e2 * t.tight.r[2];
            std::complex<double> dc2(unit(rng), unit(rng)), dc3(unit(rng), unit(rng));
            double scale = rc / (2.0 * (std::abs(dc2) + std::abs(dc3)) + 1e-300);
            std::complex<double> c2(midpoint(xb.c.at(2).re) + scale * dc2.real(),
                                    midpoint(xb.c.at(2).im) + scale * dc2.imag());
            std::complex<double> c3 = scale * dc3;

            auto df = dF_deps_float(alpha, omega, c2, c3);
            FourierVector dfv;
            for (int k = 1; k <= 8; ++k)
                dfv.set(k, CInterval(Interval(df[static_cast<size_t>(k - 1)].real()),
                                     Interval(df[static_cast<size_t>(k - 1)].imag())));
            TripleVector adf = apply_Adagger(Interval(e), dfv);
            CHECK(abs(adf.alpha).lo <= id.Q.a.hi);
            CHECK(abs(adf.omega).lo <= id.Q.w.hi);
            CHECK(norm(adf.modes).lo <= id.Q.c.hi);
        }
    }
}

TEST_CASE("batteries pass with the builtin table") {
    ParamTable t = ParamTable::builtin();

    Certificate w = certify_wright(t);
    CHECK(w.overall);
    CHECK(w.assumptions.size() == 1);
    CHECK(has_check(w, "wright/b-star"));
    CHECK(has_check(w, "wright/inclusion-rho"));
    CHECK(has_check(w, "tight/alpha-above-critical"));

    Certificate n = certify_nofold(t);
    CHECK(n.overall);
    CHECK(n.assumptions.size() == 3);
    CHECK(has_check(n, "nofold/derivative-positive"));
    CHECK(has_check(n, "nofold/alpha-reach"));

    Certificate u = certify_uniqueness(t);
    CHECK(u.overall);
    CHECK(has_check(u, "uniqueness/exit-bound"));
    CHECK(has_check(u, "uniqueness/c0"));

    Certificate all = certify_all(t, 2);
    CHECK(all.overall);
    CHECK_FALSE(all.inconclusive);
    CHECK(all.checks.size() >= 40);
    CHECK(all.assumptions.size() == 4);

    // serialization is deterministic within a process
    CHECK(certificate_to_json(w) == certificate_to_json(certify_wright(t)));
}

TEST_CASE("failed parameters produce failed certificates") {
    ParamTable t = ParamTable::builtin();
    t.tight.r = {1e-9, 1e-9, 1e-9};
    Certificate c = certify_contraction_case(t.tight);
    CHECK_FALSE(c.overall);
    CHECK_FALSE(c.inconclusive);

    Certificate n;
    n.checks.push_back(make_check("x", "y", false, Interval(0.0), Interval(0.0), "z"));
    n.checks.back().outcome = Outcome::Inconclusive;
    n.finalize();
    CHECK(n.inconclusive);
}
