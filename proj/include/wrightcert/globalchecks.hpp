#pragma once

#include "wrightcert/apriori.hpp"
#include "wrightcert/bounds.hpp"

namespace wrightcert {

/// Parameter region used by a global battery.
struct GlobalBox {
    Interval alpha_box, omega_box, eps_max, c_norm_max, Kinv_norm_max;
};

/// Lemma-style Fourier coefficients bounds: ||a|| <= sqrt(pi/(6 omega)) ||y'||_L2
/// and ||a|| <= (pi/(omega sqrt 3)) ||y'||_inf.
struct FourierBoundConsts {
    Interval l2_coeff, sup_coeff;
};
FourierBoundConsts fourier_bound_consts(const Interval& omega);

/// Certifies the admissible frequency window of a slowly oscillating solution:
/// (i) period bounds force omega in [1.11, 1.93]; (ii) the sign condition
/// (1-nu) e^{alpha nu} > 1 on nu in (0, mu]; (iii) adaptive bisection excludes
/// omega in [1.1, 1.4219] and [1.6887, 2.0].
std::vector<CheckResult> check_omega_window(int max_depth = 48);

/// Data for the implicit differentiation of the branch: Gamma, the upper
/// bounds Q0/Q on A^dagger dF/deps, the matrix Z at the eps^2-scaled radii,
/// and the quadratic-correction constants M, M'.
struct ImplicitData {
    FourierVector Gamma_eps;
    UBVec Q0, Q;
    UBMat Zeps;
    Interval kappa;
    Interval fhat1, fhatc;
    Interval M_eps, Mp_eps;
};
ImplicitData implicit_Q(const Interval& eps, const UBVec& rbar, const Interval& rho);

/// Gamma_eps, the O(eps^2)-accurate approximation of dF/deps at xbar.
FourierVector gamma_eps(const Interval& eps);

Certificate certify_opnorms();
Certificate certify_contraction_case(const ParamCase& pc);
Certificate certify_omega_window(int max_depth = 48);

/// Full batteries; with prereqs = true each certificate re-runs the
/// contraction prerequisites it rests on, so it stands alone.
Certificate certify_wright(const ParamTable& params, bool prereqs = true);
Certificate certify_nofold(const ParamTable& params, bool prereqs = true);
Certificate certify_uniqueness(const ParamTable& params, bool prereqs = true);
Certificate certify_all(const ParamTable& params, int jobs = 1);

} // namespace wrightcert
