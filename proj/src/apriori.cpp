#include "wrightcert/apriori.hpp"

namespace wrightcert {

Interval gamma_bound(const Interval& eps, const Interval& omega) {
    const Constants& C = Constants::get();
    Interval two_thirds = Interval(2) / Interval(3);
    Interval s = sqrt(nonneg(Interval(2) - Interval(2) * sin(omega - C.pi_half))) / Interval(2);
    return Interval(0.5) + eps * (two_thirds + imax(s, two_thirds));
}

Interval b_star(const Interval& eps, const Interval& alpha, const Interval& omega) {
    const Constants& C = Constants::get();
    Interval corr = Interval(2) / Interval(3) +
                    sqrt(Interval(2) + Interval(2) * abs(omega - C.pi_half)) / Interval(2);
    return omega / alpha - Interval(0.5) - eps * corr;
}

Interval b0_bound(const Interval& bs) {
    if (!(bs.lo > 0.0)) throw InvalidRegimeError("b* not certainly positive");
    return Interval(1) / bs;
}

namespace {

// z^-,z^+ at a single (b, eps) corner
ZGap z_at(const Interval& b, const Interval& eps) {
    Interval disc = sqr(b) - Interval(2) * sqr(eps);
    if (!(disc.lo >= 0.0)) throw GapError("b*^2 - 2 eps^2 not certainly nonnegative");
    Interval root = sqrt(disc);
    return {b - root, b + root};
}

} // namespace

ZGap z_gap(const Interval& eps, const Interval& bs) {
    if (!(bs.lo > 0.0) || !(sqr(bs).lo > (Interval(2) * sqr(eps)).hi))
        throw GapError("gap condition b* > sqrt(2) eps fails");
    // z^- decreases in b* and increases in eps; z^+ does the opposite. Corner
    // evaluation avoids the dependency loss of evaluating b* twice.
    ZGap worst = z_at(Interval(bs.lo), Interval(eps.hi));
    ZGap best = z_at(Interval(bs.hi), Interval(eps.lo >= 0 ? eps.lo : 0.0));
    return {Interval(best.z_minus.lo, worst.z_minus.hi),
            Interval(worst.z_plus.lo, best.z_plus.hi)};
}

Interval z_minus_linear_coeff(const Interval& eps0, const Interval& alpha,
                              const Interval& omega) {
    const Constants& C = Constants::get();
    Interval bs = b_star(eps0, alpha, omega);
    if (!(bs.lo > 0.0)) throw GapError("b*(eps0) not certainly positive");
    if (!((eps0 * C.sqrt2).hi <= bs.lo))
        throw GapError("eps0 <= b*(eps0)/sqrt(2) fails; no linear bound on z^-");
    ZGap g = z_gap(eps0, bs);
    return g.z_minus / eps0;
}

Interval g_k(int k, const Interval& omega, const Interval& alpha) {
    Interval x = omega / alpha;
    Interval kk(static_cast<double>(k));
    return sqr(Interval(1) - kk * x) +
           Interval(2) * kk * x * (Interval(1) - sin(kk * omega));
}

Interval h_k(int k, const Interval& omega) {
    Interval kk(static_cast<double>(k));
    return (sqr(kk) - Interval(1)) / Interval(2) * omega + Interval(2) * sin(omega) -
           Interval(2) * kk * sin(kk * omega);
}

std::vector<CheckResult> verify_g1_minimizer(const Interval& omega_box,
                                             const Interval& alpha_box) {
    std::vector<CheckResult> checks;
    checks.push_back(make_check("g1-minimizer/hypotheses", "omega >= 1.1 and alpha <= 2",
                                omega_box.lo >= 1.1 && alpha_box.hi <= 2.0,
                                Interval(omega_box.lo, alpha_box.hi), Interval(1.1, 2.0),
                                "minimizer-hypotheses"));

    // h_k > 0 on [1.1, 4] by adaptive bisection (max depth 40)
    for (int k = 2; k <= 4; ++k) {
        Interval witness;
        bool ok = bisect_positive([k](const Interval& w) { return h_k(k, w); }, 1.1, 4.0, 40,
                                  &witness);
        CheckResult c = make_check("g1-minimizer/h" + std::to_string(k) + "-positive-on-1.1-4",
                                   "h_" + std::to_string(k) + "(omega) > 0 on [1.1, 4]", ok,
                                   ok ? Interval(0.0) : witness, Interval(0.0),
                                   "shifted-sine-positivity");
        if (!ok) c.outcome = Outcome::Inconclusive;
        checks.push_back(c);
    }

    // Beyond omega = 4 the linear floor ((k^2-1)/2) omega - 2 - 2k takes over:
    // positive for omega > 2(2k+4)/... i.e. as soon as ((k^2-1)/2)*4 >= 2+2k,
    // and h_k exceeds the floor since |2 sin omega - 2k sin k omega| <= 2+2k.
    for (int k = 2; k <= 4; ++k) {
        Interval kk(static_cast<double>(k));
        Interval floor4 = (sqr(kk) - Interval(1)) / Interval(2) * Interval(4) -
                          (Interval(2) + Interval(2) * kk);
        checks.push_back(make_check("g1-minimizer/h" + std::to_string(k) + "-floor-past-4",
                                    "((k^2-1)/2)*4 - 2 - 2k >= 0", floor4.lo >= 0.0, floor4,
                                    Interval(0.0), "linear-floor"));
    }

    // k >= 5: (k^2-1)/2 - 2 - 2k = (k-5)(k+1)/2 >= 0, so h_k > 0 for omega >= 1
    Interval k5 = (Interval(25) - Interval(1)) / Interval(2) - Interval(12);
    checks.push_back(make_check("g1-minimizer/uniform-floor-k5",
                                "(k^2-1)/2 - 2 - 2k >= 0 at k = 5 (increasing in k)",
                                k5.lo >= 0.0, k5, Interval(0.0), "linear-floor"));
    return checks;
}

} // namespace wrightcert
