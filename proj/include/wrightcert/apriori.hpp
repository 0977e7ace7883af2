#pragma once

#include "wrightcert/certificate.hpp"
#include "wrightcert/operators.hpp"

namespace wrightcert {

/// Invertibility margin of B = i(omega/alpha) I + (U_omega + eps L_omega) K:
/// gamma bounds ||(U_omega + eps L_omega) K|| and B^{-1} is bounded by
/// 1/(omega/alpha - gamma) when gamma < omega/alpha.
Interval gamma_bound(const Interval& eps, const Interval& omega);

/// b* = omega/alpha - 1/2 - eps (2/3 + sqrt(2 + 2|omega - pi/2|)/2), a lower
/// bound on omega/alpha - gamma. Negative values are reported, not an error.
Interval b_star(const Interval& eps, const Interval& alpha, const Interval& omega);

/// In practice ||B^{-1}|| <= 1/b*; requires a certainly positive b*.
Interval b0_bound(const Interval& b_star);

/// Roots z^-,z^+ = b* -+ sqrt(b*^2 - 2 eps^2) of the separating quadratic;
/// any zero has ||ctilde|| <= z^- or >= z^+. Monotone in (b*, eps) corner
/// evaluation keeps the enclosures tight over boxes. Throws GapError when
/// b* > sqrt(2) eps cannot be certified.
struct ZGap {
    Interval z_minus, z_plus;
};
ZGap z_gap(const Interval& eps, const Interval& b_star);

/// C0 with z^-(eps) <= C0 eps for all 0 <= eps <= eps0 (the ratio z^-/eps is
/// increasing). Throws GapError unless eps0 <= b*(eps0)/sqrt(2).
Interval z_minus_linear_coeff(const Interval& eps0, const Interval& alpha,
                              const Interval& omega);

/// g_k = (1 - k omega/alpha)^2 + 2 k (omega/alpha)(1 - sin k omega); any
/// nontrivial zero of the unscaled problem has ||a||^2 >= min_k g_k.
Interval g_k(int k, const Interval& omega, const Interval& alpha);

/// h_k(omega) = ((k^2-1)/2) omega + 2 sin omega - 2k sin k omega; positivity
/// for k >= 2 on omega >= 1.1 makes k = 1 the minimizer of g_k when
/// alpha <= 2.
Interval h_k(int k, const Interval& omega);

/// Certifies g_1 < g_k for all k >= 2 on omega_box x alpha_box
/// (omega >= 1.1, alpha <= 2): adaptive bisection of h_2, h_3, h_4 > 0 on
/// [1.1, 4], linear floors for omega > 4, and the uniform floor for k >= 5.
std::vector<CheckResult> verify_g1_minimizer(const Interval& omega_box,
                                             const Interval& alpha_box);

/// Adaptive bisection: certifies f > 0 on [lo, hi]; returns false (and the
/// deepest failing box) if the depth budget is exhausted.
template <typename F>
bool bisect_positive(F&& f, double lo, double hi, int max_depth, Interval* witness = nullptr) {
    struct Box {
        double lo, hi;
        int depth;
    };
    std::vector<Box> stack{{lo, hi, 0}};
    while (!stack.empty()) {
        Box b = stack.back();
        stack.pop_back();
        Interval v = f(Interval(b.lo, b.hi));
        if (v.lo > 0.0) continue;
        if (b.depth >= max_depth) {
            if (witness) *witness = Interval(b.lo, b.hi);
            return false;
        }
        double mid = 0.5 * (b.lo + b.hi);
        stack.push_back({b.lo, mid, b.depth + 1});
        stack.push_back({mid, b.hi, b.depth + 1});
    }
    return true;
}

} // namespace wrightcert
