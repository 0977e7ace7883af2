#include "doctest.h"

#include <cmath>
#include <random>

#include "wrightcert/operators.hpp"
#include "wrightcert/oracle.hpp"

using namespace wrightcert;
using oracle::TruncatedState;
using oracle::cplx;

namespace {

constexpr double kPi = 3.14159265358979323846;

double residual_max(double eps, const TruncatedState& s) {
    double m = 0.0;
    for (const cplx& v : oracle::eval_F(eps, s))
        m = std::max({m, std::fabs(v.real()), std::fabs(v.imag())});
    return m;
}

std::mt19937_64 rng(97531u);

TruncatedState random_state(int N) {
    TruncatedState s;
    std::uniform_real_distribution<double> d(-0.05, 0.05);
    s.alpha = kPi / 2 + d(rng);
    s.omega = kPi / 2 + d(rng);
    s.c.resize(static_cast<size_t>(N - 1));
    for (auto& v : s.c) v = cplx(d(rng), d(rng));
    return s;
}

} // namespace

TEST_CASE("bifurcation point is an exact zero") {
    TruncatedState s;
    s.alpha = kPi / 2;
    s.omega = kPi / 2;
    s.c.assign(15, cplx(0.0, 0.0));
    CHECK(residual_max(0.0, s) < 1e-15);
}

TEST_CASE("residual at the approximate solution is O(eps^2)") {
    for (double e : {0.02, 0.05, 0.1}) {
        TruncatedState s = oracle::approximate_state(e, 16);
        CHECK(residual_max(e, s) / (e * e) < 2.0);
    }
}

TEST_CASE("analytic Jacobian matches central finite differences") {
    int N = 10, n = 2 * N;
    for (int trial = 0; trial < 3; ++trial) {
        TruncatedState s = random_state(N);
        double eps = 0.05;
        std::vector<double> J = oracle::eval_DF(eps, s);
        double h = 1e-6;
        double worst = 0.0, scale = 0.0;
        for (double v : J) scale = std::max(scale, std::fabs(v));
        for (int j = 0; j < n; ++j) {
            TruncatedState p = s, m = s;
            if (j == 0) {
                p.alpha += h;
                m.alpha -= h;
            } else if (j == 1) {
                p.omega += h;
                m.omega -= h;
            } else {
                size_t idx = static_cast<size_t>((j - 2) / 2);
                cplx dir = (j - 2) % 2 == 0 ? cplx(h, 0.0) : cplx(0.0, h);
                p.c[idx] += dir;
                m.c[idx] -= dir;
            }
            auto Fp = oracle::eval_F(eps, p);
            auto Fm = oracle::eval_F(eps, m);
            for (int k = 0; k < N; ++k) {
                double dre = (Fp[static_cast<size_t>(k)].real() - Fm[static_cast<size_t>(k)].real()) / (2 * h);
                double dim = (Fp[static_cast<size_t>(k)].imag() - Fm[static_cast<size_t>(k)].imag()) / (2 * h);
                worst = std::max(worst, std::fabs(dre - J[static_cast<size_t>(2 * k) * n + j]));
                worst = std::max(worst, std::fabs(dim - J[static_cast<size_t>(2 * k + 1) * n + j]));
            }
        }
        CHECK(worst / scale < 1e-6);
    }
}

TEST_CASE("Newton converges into the tight radii") {
    const double rbar[3] = {0.0594, 0.0260, 0.4929};
    for (double e : {0.02, 0.05, 0.1}) {
        TruncatedState s = oracle::newton_solve(e, oracle::approximate_state(e, 32));
        CHECK(residual_max(e, s) < oracle::kResidualTol);

        TruncatedState xb = oracle::approximate_state(e, 32);
        double e2 = e * e;
        CHECK(std::fabs(s.alpha - xb.alpha) < rbar[0] * e2 - 1e-8);
        CHECK(std::fabs(s.omega - xb.omega) < rbar[1] * e2 - 1e-8);
        double dc = 0.0, kinv = 0.0;
        for (size_t j = 0; j < s.c.size(); ++j) {
            dc += std::abs(s.c[j] - xb.c[j]);
            kinv += static_cast<double>(j + 2) * std::abs(s.c[j]);
        }
        CHECK(2.0 * dc < rbar[2] * e2 - 1e-8);
        CHECK(2.0 * kinv < 0.3191 - 1e-8);
    }

    // the iteration cap is enforced: one step from a cold start cannot meet
    // both the residual and step tolerances
    TruncatedState cold = oracle::approximate_state(0.1, 8);
    cold.alpha += 0.5;
    CHECK_THROWS_AS(oracle::newton_solve(0.1, cold, 1), ConvergenceError);
}

TEST_CASE("truncation stability at eps = 0.1") {
    TruncatedState a = oracle::newton_solve(0.1, oracle::approximate_state(0.1, 32));
    TruncatedState b = oracle::newton_solve(0.1, oracle::approximate_state(0.1, 64));
    CHECK(std::fabs(a.alpha - b.alpha) < 1e-10);
    CHECK(std::fabs(a.omega - b.omega) < 1e-10);
}

TEST_CASE("branch continuation") {
    std::vector<double> grid;
    for (int i = 1; i <= 20; ++i) grid.push_back(0.1 * i / 20);
    auto branch = oracle::continue_branch(grid, 24, 1024);
    REQUIRE(branch.size() == 20);

    double expected_slope = 2.0 / 5.0 * (3.0 * kPi / 2 - 1.0);
    for (const auto& p : branch) {
        CHECK(p.dalpha_deps > 0.0);
        CHECK(p.defect <= 1e-8);
    }
    // dalpha/deps ~ (2/5)(3 pi/2 - 1) eps within 20% mid-branch
    const auto& mid = branch[9]; // eps = 0.05
    CHECK(std::fabs(mid.dalpha_deps - expected_slope * mid.eps) < 0.2 * expected_slope * mid.eps);

    // branch converges to the bifurcation point as eps -> 0
    CHECK(std::fabs(branch.front().state.alpha - kPi / 2) < 1e-4);
    CHECK(std::fabs(branch.front().state.omega - kPi / 2) < 1e-4);
}

namespace {

// dense solve for the cross-check below
std::vector<double> solve_dense(std::vector<double> A, std::vector<double> b) {
    int n = static_cast<int>(b.size());
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(A[static_cast<size_t>(r) * n + col]) >
                std::fabs(A[static_cast<size_t>(piv) * n + col]))
                piv = r;
        for (int j = 0; j < n; ++j)
            std::swap(A[static_cast<size_t>(col) * n + j], A[static_cast<size_t>(piv) * n + j]);
        std::swap(b[static_cast<size_t>(col)], b[static_cast<size_t>(piv)]);
        double d = A[static_cast<size_t>(col) * n + col];
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            double f = A[static_cast<size_t>(r) * n + col] / d;
            for (int j = col; j < n; ++j)
                A[static_cast<size_t>(r) * n + j] -= f * A[static_cast<size_t>(col) * n + j];
            b[static_cast<size_t>(r)] -= f * b[static_cast<size_t>(col)];
        }
    }
    for (int i = 0; i < n; ++i) b[static_cast<size_t>(i)] /= A[static_cast<size_t>(i) * n + i];
    return b;
}

} // namespace

TEST_CASE("Adagger approximates the inverse Jacobian to second order") {
    // solve DF(xbar_eps) v = y numerically and compare with the certified
    // A^dagger y; the gap must shrink like eps^2
    for (double e : {0.02, 0.05, 0.1}) {
        int N = 16, n = 2 * N;
        TruncatedState xb = oracle::approximate_state(e, N);
        std::vector<double> J = oracle::eval_DF(e, xb);
        // y = e_1 + i e_2 as a rhs
        std::vector<double> rhs(static_cast<size_t>(n), 0.0);
        rhs[0] = 1.0;
        rhs[3] = 1.0;
        std::vector<double> v = solve_dense(J, rhs);

        wrightcert::FourierVector y;
        y.set(1, wrightcert::CInterval(1.0, 0.0));
        y.set(2, wrightcert::CInterval(0.0, 1.0));
        wrightcert::TripleVector ad = wrightcert::apply_Adagger(wrightcert::Interval(e), y);
        double gap = std::fabs(v[0] - wrightcert::midpoint(ad.alpha)) +
                     std::fabs(v[1] - wrightcert::midpoint(ad.omega));
        for (int m = 2; m <= 6; ++m) {
            gap += std::fabs(v[static_cast<size_t>(2 * (m - 1))] -
                             wrightcert::midpoint(ad.modes.at(m).re));
            gap += std::fabs(v[static_cast<size_t>(2 * (m - 1) + 1)] -
                             wrightcert::midpoint(ad.modes.at(m).im));
        }
        CHECK(gap < 5.0 * e * e); // second-order agreement
    }
}

TEST_CASE("reconstruction and defect") {
    TruncatedState s = oracle::newton_solve(0.05, oracle::approximate_state(0.05, 32));
    CHECK(oracle::solution_defect(s, 0.05, 4096) <= 1e-8);

    auto y = oracle::reconstruct_solution(s, 0.05);
    double maxy = 0.0;
    double period = 2 * kPi / s.omega;
    for (int i = 0; i < 2048; ++i) maxy = std::max(maxy, std::fabs(y(period * i / 2048)));
    CHECK(maxy > 2 * 0.05 * 0.9);
    CHECK(maxy < 2 * 0.05 * 1.2);

    // zero state reconstructs the zero solution
    TruncatedState z;
    z.alpha = kPi / 2;
    z.omega = kPi / 2;
    z.c.assign(15, cplx(0.0, 0.0));
    CHECK(oracle::solution_defect(z, 0.0, 256) == 0.0);

    CHECK_THROWS_AS(oracle::eval_F(0.1, TruncatedState{}), DomainError);
}
