#pragma once

#include <array>
#include <optional>

#include "wrightcert/certificate.hpp"
#include "wrightcert/operators.hpp"

namespace wrightcert {

/// The distance budgets |alpha - pi/2| <= da, |omega - pi/2| <= dw,
/// ||c|| <= dc over a ball of radius r around the approximate solution.
struct Deltas {
    Interval da0, dw0, dc0;  // at the center (r = 0)
    Interval da, dw, dc;     // over the ball
    static Deltas at(const Interval& eps, const UBVec& r);
};

/// Approximate solution curve: alpha = pi/2 + (eps^2/5)(3pi/2 - 1),
/// omega = pi/2 - eps^2/5, c = ((2-i)/5) eps e_2.
struct XBar {
    Interval alpha, omega;
    FourierVector c;
};
XBar xbar(const Interval& eps);

/// Candidate contraction domain: the ball B_eps(r, rho) around xbar(eps).
struct BallSpec {
    Interval eps;
    UBVec r;
    Interval rho;
};

/// Majorants f_1..f_4 of |F_k(xbar_eps)|, polynomials in eps with nonnegative
/// coefficients and lowest degree >= 2 (which is what makes Y(eps)/eps^2
/// nondecreasing).
std::array<Interval, 4> residual_f(const Interval& eps);

/// Componentwise upper bound Y(eps) on T(xbar_eps) - xbar_eps.
UBVec Y_bound(const Interval& eps);

/// Uniform upper bound Z(eps, r, rho) on DT over B_eps(r, rho); nondecreasing
/// in every argument.
UBMat Z_bound(const Interval& eps, const UBVec& r, const Interval& rho);

/// Smallest admissible rho: rho >= C(eps, r) keeps ||K^{-1} pi_c T(x)|| <= rho
/// on the ball. Throws InvalidRegimeError when C1*C2 >= 1.
Interval C_rho(const Interval& eps, const UBVec& r);

/// P(eps, r, rho) = Y(eps) - (I - Z(eps, r, rho)) r, componentwise signed.
std::array<Interval, 3> radii_polynomials(const Interval& eps, const UBVec& r,
                                          const Interval& rho);

struct ContractionReport {
    std::vector<CheckResult> checks;
    bool passed = false;
    Interval kappa;  // max_i (Z r)_i / r_i
    UBMat Z;
};

/// Certifies that T contracts B_eps0(r, rho) (Newton-Kantorovich via negative
/// radii polynomials). With scaled = true the radii are r = eps0^2 rbar and
/// the conclusion extends to every eps <= eps0 with eps^2-scaled radii; the
/// report then also certifies rbar_alpha < (1/5)(3pi/2 - 1), which places the
/// solution branch strictly above alpha = pi/2.
ContractionReport check_contraction(const BallSpec& spec, bool scaled,
                                    const std::string& label);

/// Named parameter cases for the three published contraction domains.
struct ParamCase {
    std::string name;
    double eps0 = 0;
    std::array<double, 3> r{};  // plain radii, or rbar when scaled
    double rho = 0;
    bool scaled = false;
    BallSpec ball() const;
};

struct ParamTable {
    std::string version;
    ParamCase bigbox_a, bigbox_b, tight;
    static ParamTable builtin();
};

} // namespace wrightcert
