#include "wrightcert/oracle.hpp"

#include <cmath>

#include <Eigen/Dense>

namespace wrightcert {
namespace oracle {

namespace {

constexpr double kPi = 3.14159265358979323846;

// signed-mode coefficient with c_0 = c_{+-1} = 0 and c_{-k} = conj(c_k)
cplx coef(const TruncatedState& s, int k) {
    int a = std::abs(k);
    if (a <= 1 || a > s.modes()) return {0.0, 0.0};
    cplx v = s.c[static_cast<size_t>(a - 2)];
    return k > 0 ? v : std::conj(v);
}

cplx phase(double omega, int k) { return std::exp(cplx(0.0, -k * omega)); }

// [U_omega c] * c over the symmetric extension, modes 1..N
std::vector<cplx> convolution(const TruncatedState& s, double omega) {
    int N = s.modes();
    std::vector<cplx> out(static_cast<size_t>(N));
    for (int k = 1; k <= N; ++k) {
        cplx acc{0.0, 0.0};
        for (int k1 = -N; k1 <= N; ++k1) {
            int k2 = k - k1;
            if (std::abs(k2) > N) continue;
            acc += phase(omega, k1) * coef(s, k1) * coef(s, k2);
        }
        out[static_cast<size_t>(k - 1)] = acc;
    }
    return out;
}

// (L_omega c)_k = (e^{-i omega} + e^{-i(k-1) omega}) c_{k-1}
//              + (e^{i omega} + e^{-i(k+1) omega}) c_{k+1}
cplx L_at(const TruncatedState& s, double omega, int k) {
    return (phase(omega, 1) + phase(omega, k - 1)) * coef(s, k - 1) +
           (phase(omega, -1) + phase(omega, k + 1)) * coef(s, k + 1);
}

// directional derivative of F in the c-direction b (with b extended
// symmetrically), evaluated at modes 1..N:
// dF/dc . b = (i omega K^{-1} + alpha U_omega) b
//           + alpha eps (L_omega b + [U_omega b]*c + [U_omega c]*b)
std::vector<cplx> dF_dc(double eps, const TruncatedState& s, int m, cplx bval) {
    int N = s.modes();
    double a = s.alpha, w = s.omega;
    std::vector<cplx> out(static_cast<size_t>(N));
    auto bcoef = [&](int k) -> cplx {
        if (k == m) return bval;
        if (k == -m) return std::conj(bval);
        return {0.0, 0.0};
    };
    for (int k = 1; k <= N; ++k) {
        cplx v{0.0, 0.0};
        if (k == m) v += (cplx(0.0, w * k) + a * phase(w, k)) * bval;
        // L_omega b
        cplx lb = (phase(w, 1) + phase(w, k - 1)) * bcoef(k - 1) +
                  (phase(w, -1) + phase(w, k + 1)) * bcoef(k + 1);
        // [U_omega b] * c + [U_omega c] * b; b has support {m, -m}
        cplx conv = phase(w, m) * bval * coef(s, k - m) +
                    phase(w, -m) * std::conj(bval) * coef(s, k + m) +
                    phase(w, k - m) * coef(s, k - m) * bval +
                    phase(w, k + m) * coef(s, k + m) * std::conj(bval);
        v += a * eps * (lb + conv);
        out[static_cast<size_t>(k - 1)] = v;
    }
    return out;
}

} // namespace

std::vector<cplx> eval_F(double eps, const TruncatedState& s) {
    int N = s.modes();
    if (N < 8) throw DomainError("truncation order must be >= 8");
    double a = s.alpha, w = s.omega;
    std::vector<cplx> conv = convolution(s, w);
    std::vector<cplx> F(static_cast<size_t>(N));
    F[0] = cplx(0.0, w) + a * phase(w, 1) + a * eps * (L_at(s, w, 1) + conv[0]);
    for (int k = 2; k <= N; ++k) {
        cplx v = (cplx(0.0, w * k) + a * phase(w, k)) * coef(s, k) +
                 a * eps * (L_at(s, w, k) + conv[static_cast<size_t>(k - 1)]);
        if (k == 2) v += eps * a * phase(w, 1);
        F[static_cast<size_t>(k - 1)] = v;
    }
    return F;
}

std::vector<double> eval_DF(double eps, const TruncatedState& s) {
    int N = s.modes();
    int n = 2 * N;
    double a = s.alpha, w = s.omega;
    std::vector<double> J(static_cast<size_t>(n) * n, 0.0);
    auto put_col = [&](int col, const std::vector<cplx>& dF) {
        for (int k = 1; k <= N; ++k) {
            J[static_cast<size_t>(2 * (k - 1)) * n + col] = dF[static_cast<size_t>(k - 1)].real();
            J[static_cast<size_t>(2 * (k - 1) + 1) * n + col] = dF[static_cast<size_t>(k - 1)].imag();
        }
    };

    // dF/dalpha = e^{-i omega} e_1 + U_omega c + eps e^{-i omega} e_2
    //           + eps L_omega c + eps [U_omega c]*c
    std::vector<cplx> conv = convolution(s, w);
    std::vector<cplx> da(static_cast<size_t>(N));
    for (int k = 1; k <= N; ++k) {
        cplx v = phase(w, k) * coef(s, k) + eps * (L_at(s, w, k) + conv[static_cast<size_t>(k - 1)]);
        if (k == 1) v += phase(w, 1);
        if (k == 2) v += eps * phase(w, 1);
        da[static_cast<size_t>(k - 1)] = v;
    }
    put_col(0, da);

    // dF/domega = i(1 - alpha e^{-i omega}) e_1 + i K^{-1}(I - alpha U_omega) c
    //           - i alpha eps e^{-i omega} e_2 + alpha eps L'_omega c
    //           - i alpha eps [K^{-1} U_omega c]*c
    std::vector<cplx> dw(static_cast<size_t>(N));
    const cplx I(0.0, 1.0);
    for (int k = 1; k <= N; ++k) {
        cplx v = I * cplx(static_cast<double>(k), 0.0) * (coef(s, k) - a * phase(w, k) * coef(s, k));
        if (k == 1) v += I * (1.0 - a * phase(w, 1));
        if (k == 2) v += -I * a * eps * phase(w, 1);
        // L'_omega = -i sigma^+(e^{-i omega} I + K^{-1} U_omega)
        //           + i sigma^-(e^{i omega} I - K^{-1} U_omega)
        cplx lp = -I * (phase(w, 1) + cplx(k - 1, 0.0) * phase(w, k - 1)) * coef(s, k - 1) +
                  I * (phase(w, -1) - cplx(k + 1, 0.0) * phase(w, k + 1)) * coef(s, k + 1);
        // [K^{-1} U_omega c] * c
        cplx kconv{0.0, 0.0};
        int NN = s.modes();
        for (int k1 = -NN; k1 <= NN; ++k1) {
            int k2 = k - k1;
            if (std::abs(k2) > NN) continue;
            kconv += cplx(k1, 0.0) * phase(w, k1) * coef(s, k1) * coef(s, k2);
        }
        v += a * eps * lp - I * a * eps * kconv;
        dw[static_cast<size_t>(k - 1)] = v;
    }
    put_col(1, dw);

    for (int m = 2; m <= N; ++m) {
        put_col(2 * (m - 1), dF_dc(eps, s, m, cplx(1.0, 0.0)));
        put_col(2 * (m - 1) + 1, dF_dc(eps, s, m, cplx(0.0, 1.0)));
    }
    return J;
}

TruncatedState approximate_state(double eps, int N) {
    TruncatedState s;
    s.alpha = kPi / 2 + eps * eps / 5.0 * (3.0 * kPi / 2 - 1.0);
    s.omega = kPi / 2 - eps * eps / 5.0;
    s.c.assign(static_cast<size_t>(N - 1), cplx(0.0, 0.0));
    s.c[0] = cplx(0.4, -0.2) * eps;
    return s;
}

TruncatedState newton_solve(double eps, const TruncatedState& guess, int max_iter) {
    TruncatedState s = guess;
    int N = s.modes();
    int n = 2 * N;
    double last_step = 1.0;
    for (int it = 0; it < max_iter; ++it) {
        std::vector<cplx> F = eval_F(eps, s);
        double rmax = 0.0;
        for (const cplx& v : F) rmax = std::max({rmax, std::fabs(v.real()), std::fabs(v.imag())});
        if (rmax < kResidualTol && last_step < kStepTol) return s;

        std::vector<double> J = eval_DF(eps, s);
        Eigen::MatrixXd A(n, n);
        Eigen::VectorXd b(n);
        for (int i = 0; i < n; ++i) {
            b(i) = i % 2 == 0 ? -F[static_cast<size_t>(i / 2)].real()
                              : -F[static_cast<size_t>(i / 2)].imag();
            for (int j = 0; j < n; ++j) A(i, j) = J[static_cast<size_t>(i) * n + j];
        }
        Eigen::VectorXd d = A.partialPivLu().solve(b);
        s.alpha += d(0);
        s.omega += d(1);
        for (int m = 2; m <= N; ++m)
            s.c[static_cast<size_t>(m - 2)] += cplx(d(2 * (m - 1)), d(2 * (m - 1) + 1));
        last_step = d.lpNorm<Eigen::Infinity>();
    }
    throw ConvergenceError("Newton iteration did not converge");
}

std::function<double(double)> reconstruct_solution(const TruncatedState& s, double eps) {
    TruncatedState copy = s;
    return [copy, eps](double t) {
        double y = 2.0 * eps * std::cos(copy.omega * t);
        for (int m = 2; m <= copy.modes(); ++m)
            y += 2.0 * eps *
                 (copy.c[static_cast<size_t>(m - 2)] * std::exp(cplx(0.0, m * copy.omega * t)))
                     .real();
        return y;
    };
}

double solution_defect(const TruncatedState& s, double eps, int samples) {
    double w = s.omega, a = s.alpha;
    double period = 2.0 * kPi / w;
    auto y = reconstruct_solution(s, eps);
    auto yp = [&](double t) {
        double v = -2.0 * eps * w * std::sin(w * t);
        for (int m = 2; m <= s.modes(); ++m)
            v += 2.0 * eps *
                 (cplx(0.0, m * w) * s.c[static_cast<size_t>(m - 2)] *
                  std::exp(cplx(0.0, m * w * t)))
                     .real();
        return v;
    };
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        double t = period * i / samples;
        worst = std::max(worst, std::fabs(yp(t) + a * y(t - 1.0) * (1.0 + y(t))));
    }
    return worst;
}

std::vector<BranchPoint> continue_branch(const std::vector<double>& eps_grid, int N,
                                         int defect_samples) {
    std::vector<BranchPoint> out;
    out.reserve(eps_grid.size());
    TruncatedState seed;
    for (size_t i = 0; i < eps_grid.size(); ++i) {
        double e = eps_grid[i];
        TruncatedState guess = i == 0 ? approximate_state(e, N) : seed;
        BranchPoint p;
        p.eps = e;
        p.state = newton_solve(e, guess);
        seed = p.state;
        p.c_norm = 0.0;
        for (const cplx& v : p.state.c) p.c_norm += std::abs(v);
        p.c_norm *= 2.0;
        p.defect = solution_defect(p.state, e, defect_samples);
        out.push_back(std::move(p));
    }
    for (size_t i = 0; i < out.size(); ++i) {
        size_t j0 = i == 0 ? 0 : i - 1;
        size_t j1 = i + 1 == out.size() ? i : i + 1;
        out[i].dalpha_deps =
            (out[j1].state.alpha - out[j0].state.alpha) / (out[j1].eps - out[j0].eps);
    }
    return out;
}

} // namespace oracle
} // namespace wrightcert
