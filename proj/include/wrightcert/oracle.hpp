#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "wrightcert/errors.hpp"

namespace wrightcert {
namespace oracle {

/// Non-rigorous floating-point companion of the certified bounds: truncated
/// Fourier evaluation of the zero-finding map, a Newton solver, and branch
/// continuation in eps. Everything here is plain double arithmetic.

using cplx = std::complex<double>;

/// Truncated state: (alpha, omega) plus complex modes 2..N (c[j] is mode j+2).
struct TruncatedState {
    double alpha = 0.0;
    double omega = 0.0;
    std::vector<cplx> c;
    int modes() const { return static_cast<int>(c.size()) + 1; } // N
};

/// Residuals of the truncated system, modes 1..N (index k-1).
std::vector<cplx> eval_F(double eps, const TruncatedState& s);

/// Real-parametrized Jacobian in the unknowns (alpha, omega, Re c_k, Im c_k),
/// rows (Re F_1, Im F_1, ..., Re F_N, Im F_N); row-major (2N) x (2N).
std::vector<double> eval_DF(double eps, const TruncatedState& s);

/// Center of the tight contraction domain as a truncated state.
TruncatedState approximate_state(double eps, int N);

constexpr double kResidualTol = 1e-12;
constexpr double kStepTol = 1e-10;

/// Newton iteration from `guess`; throws ConvergenceError after 50 iterations.
TruncatedState newton_solve(double eps, const TruncatedState& guess, int max_iter = 50);

struct BranchPoint {
    double eps = 0.0;
    TruncatedState state;
    double dalpha_deps = 0.0;
    double c_norm = 0.0;   // 2 sum |c_k|
    double defect = 0.0;   // sup_t |y'(t) + alpha y(t-1)(1 + y(t))|
};

/// Solves along an increasing eps grid, seeding each solve with the previous
/// solution; derivative by finite differences on the grid.
std::vector<BranchPoint> continue_branch(const std::vector<double>& eps_grid, int N,
                                         int defect_samples = 4096);

/// y(t) = eps(e^{i omega t} + c.c.) + eps sum_k (c_k e^{i k omega t} + c.c.).
std::function<double(double)> reconstruct_solution(const TruncatedState& s, double eps);

/// sup over `samples` points of one period of the delay-equation defect.
double solution_defect(const TruncatedState& s, double eps, int samples = 4096);

} // namespace oracle
} // namespace wrightcert
