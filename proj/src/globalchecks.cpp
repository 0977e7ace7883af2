#include "wrightcert/globalchecks.hpp"

#include <functional>
#include <future>
#include <sstream>

namespace wrightcert {

namespace {

Interval row_alpha_norm() {
    const ABlocks& B = ABlocks::get();
    return sqrt(sqr(B.A01_inv[0][0]) + sqr(B.A01_inv[0][1]));
}
Interval row_omega_norm() {
    const ABlocks& B = ABlocks::get();
    return sqrt(sqr(B.A01_inv[1][0]) + sqr(B.A01_inv[1][1]));
}

Interval three_pi_half_minus_one() {
    const Constants& C = Constants::get();
    return Interval(3) * C.pi_half - Interval(1);
}

// The Wright box: alpha in [1.5706, pi/2], omega in [1.4219, 1.6887],
// 0 < eps <= eps* = mu/sqrt(2).
GlobalBox wright_box() {
    const Constants& C = Constants::get();
    GlobalBox b;
    b.alpha_box = Interval(1.5706, C.pi_half.hi);
    b.omega_box = Interval(1.4219, 1.6887);
    b.eps_max = C.eps_star;
    b.c_norm_max = Interval(0.0796);
    b.Kinv_norm_max = Interval(0.16);
    return b;
}

// The uniqueness box of the eps-free neighborhoods: alpha in
// (pi/2, pi/2 + 0.00553], |omega - pi/2| <= 0.0924, eps <= 0.09.
GlobalBox uniqueness_box() {
    const Constants& C = Constants::get();
    GlobalBox b;
    b.alpha_box = Interval(C.pi_half.lo, (C.pi_half + Interval(0.00553)).hi);
    b.omega_box = Interval((C.pi_half - Interval(0.0924)).lo, (C.pi_half + Interval(0.0924)).hi);
    b.eps_max = Interval(0.09);
    b.c_norm_max = Interval(0.30232);
    b.Kinv_norm_max = Interval(0.61);
    return b;
}

// lhs - rhs of the frequency-exclusion inequality: positive means the box
// cannot hold a small-amplitude solution.
Interval band_gap(const Interval& alpha, const Interval& omega) {
    const Constants& C = Constants::get();
    Interval lhs = omega * sqrt(nonneg(sqr(omega - alpha) +
                                       Interval(2) * alpha * omega * (Interval(1) - sin(omega))));
    Interval rhs = Interval(2) * C.pi / sqrt(Interval(3)) * sqr(alpha) * C.mu *
                   (Interval(1) + C.mu);
    return lhs - rhs;
}

struct Box2 {
    Interval a, w;
    int depth = 0;
};

bool bisect2_positive(const Interval& a0, const Interval& w0, int max_depth, Box2* witness,
                      long* boxes) {
    std::vector<Box2> stack{{a0, w0, 0}};
    while (!stack.empty()) {
        Box2 b = stack.back();
        stack.pop_back();
        if (boxes) ++*boxes;
        if (band_gap(b.a, b.w).lo > 0.0) continue;
        if (b.depth >= max_depth) {
            if (witness) *witness = b;
            return false;
        }
        if (width(b.a) >= width(b.w)) {
            double m = midpoint(b.a);
            stack.push_back({Interval(b.a.lo, m), b.w, b.depth + 1});
            stack.push_back({Interval(m, b.a.hi), b.w, b.depth + 1});
        } else {
            double m = midpoint(b.w);
            stack.push_back({b.a, Interval(b.w.lo, m), b.depth + 1});
            stack.push_back({b.a, Interval(m, b.w.hi), b.depth + 1});
        }
    }
    return true;
}

std::vector<Assumption> wright_assumptions() {
    return {{"sops-range-reduction",
             "any slowly oscillating periodic solution with alpha <= pi/2 has "
             "alpha in [1.5706, pi/2] and sup norm at most e^0.04 - 1 (imported result)"}};
}

std::vector<Assumption> branch_assumptions() {
    return {{"branch-regular-on-[pi/2+7.3165e-4,2.3]",
             "the periodic-orbit branch has no folds or secondary bifurcations for "
             "alpha in [pi/2 + 7.3165e-4, 2.3] (imported result)"},
            {"sops-unique-on-[1.94,6.00]",
             "the slowly oscillating periodic solution is unique for alpha in "
             "[1.94, 6.00] (imported result)"},
            {"sops-unique-on-[5.67,inf)",
             "the slowly oscillating periodic solution is unique for alpha >= 5.67 "
             "(imported result)"}};
}

Certificate base_certificate(const std::string& target) {
    Certificate c;
    c.tool_version = kToolVersion;
    c.parameter_table_version = ParamTable::builtin().version;
    c.target = target;
    return c;
}

} // namespace

FourierBoundConsts fourier_bound_consts(const Interval& omega) {
    if (!(omega.lo > 0.0)) throw DomainError("fourier_bound_consts requires omega > 0");
    const Constants& C = Constants::get();
    FourierBoundConsts f;
    f.l2_coeff = sqrt(C.pi / (Interval(6) * omega));
    f.sup_coeff = C.pi / (omega * sqrt(Interval(3)));
    return f;
}

std::vector<CheckResult> check_omega_window(int max_depth) {
    const Constants& C = Constants::get();
    std::vector<CheckResult> checks;
    Interval alpha(1.5706, C.pi_half.hi);

    // period window: t+ > 1 + (1/alpha) log(1+mu)/mu with log(1+mu) = 1/25
    // exactly, t- > 1 + 1/alpha, t+ < 2 + 1/alpha, t- < 3
    Interval log_ratio = Interval(1) / (Interval(25) * C.mu);
    Interval L_lo = Interval(2) + (Interval(1) + log_ratio) / alpha;
    Interval L_hi = Interval(5) + Interval(1) / alpha;
    checks.push_back(make_check_threshold("omega-window/period-lower", "2 + (1 + 1/(25 mu))/alpha >= 3.26",
                                          ge_threshold(Interval(L_lo.lo), 3.26), L_lo, 3.26,
                                          "zero-spacing-period-bounds"));
    checks.push_back(make_check_threshold("omega-window/period-upper", "5 + 1/alpha <= 5.64",
                                          le_threshold(Interval(L_hi.hi), 5.64), L_hi, 5.64,
                                          "zero-spacing-period-bounds"));
    Interval w_lo = C.two_pi / Interval(5.64);
    Interval w_hi = C.two_pi / Interval(3.26);
    checks.push_back(make_check_threshold("omega-window/frequency-lower", "2 pi / 5.64 >= 1.11",
                                          ge_threshold(w_lo, 1.11), w_lo, 1.11,
                                          "period-to-frequency"));
    checks.push_back(make_check_threshold("omega-window/frequency-upper", "2 pi / 3.26 <= 1.93",
                                          le_threshold(w_hi, 1.93), w_hi, 1.93,
                                          "period-to-frequency"));

    // sign condition: (1 - nu) e^{alpha nu} > 1 for nu in (0, mu]. Since
    // alpha + log(1-nu)/nu decreases in nu, positivity at nu = mu with the
    // smallest alpha certifies the whole range.
    Interval sign_lhs = (Interval(1) - C.mu) * exp(Interval(1.5706) * C.mu);
    checks.push_back(make_check("omega-window/descent-sign-condition",
                                "(1 - mu) e^{1.5706 mu} > 1", sign_lhs.lo > 1.0, sign_lhs,
                                Interval(1.0), "descending-segment-contradiction"));

    // excluded frequency bands
    struct Band {
        const char* name;
        double lo, hi;
    };
    for (const Band& band : {Band{"omega-window/band-low", 1.1, 1.4219},
                             Band{"omega-window/band-high", 1.6887, 2.0}}) {
        Box2 witness;
        long boxes = 0;
        bool ok = bisect2_positive(alpha, Interval(band.lo, band.hi), max_depth, &witness, &boxes);
        std::ostringstream ineq;
        ineq << "omega sqrt((omega-alpha)^2 + 2 alpha omega (1 - sin omega)) > "
             << "(2 pi/sqrt 3) alpha^2 mu (1+mu) on [" << band.lo << ", " << band.hi << "] ("
             << boxes << " boxes)";
        if (!ok)
            ineq << " undecided at alpha=[" << witness.a.lo << ", " << witness.a.hi
                 << "] omega=[" << witness.w.lo << ", " << witness.w.hi << "]";
        CheckResult c = make_check(band.name, ineq.str(), ok,
                                   ok ? Interval(band.lo, band.hi)
                                      : hull(witness.a, witness.w),
                                   Interval(0.0), "frequency-band-exclusion");
        if (!ok) c.outcome = Outcome::Inconclusive;
        checks.push_back(c);
    }
    return checks;
}

FourierVector gamma_eps(const Interval& eps) {
    const Constants& C = Constants::get();
    FourierVector g;
    Interval fifth = Interval(1) / Interval(5);
    g.set(1, (C.pi_half * eps) * CInterval(-fifth, Interval(3) * fifth));
    g.set(2, CInterval(Interval(0.0), -C.pi_half));
    g.set(3, (C.pi_half * eps) * CInterval(Interval(-3) * fifth, -fifth));
    return g;
}

ImplicitData implicit_Q(const Interval& eps, const UBVec& rbar, const Interval& rho) {
    if (!(eps.lo > 0.0))
        throw DomainError("implicit corrections are eps^{-2}-normalized and need eps > 0");
    const Constants& C = Constants::get();
    ImplicitData out;
    out.Gamma_eps = gamma_eps(eps);

    Interval e2 = sqr(eps);
    UBVec r{e2 * rbar.a, e2 * rbar.w, e2 * rbar.c};
    Deltas d = Deltas::at(eps, r);

    // fhat bounds on the alpha/omega and c rows of A_0^{-1}(dF/deps - Gamma)
    Interval half(0.5);
    Interval common = C.sqrt2 * d.da + Interval(3) * d.dw * (C.pi_half + d.da);
    out.fhat1 = half * d.dc0 * common +
                r.c * (C.pi_half + d.da) * (Interval(1) + d.dc0 + half * r.c);
    out.fhatc = Interval(2) / (C.pi * C.sqrt5) *
                (Interval(2) * (d.da + C.pi_half * d.dw) + d.dc0 * common +
                 (C.pi_half + d.da) * (Interval(4) * r.c + sqr(d.dc)));

    // Q0 bounds the norm triple of A^dagger Gamma
    out.Q0.a = Interval(2) / Interval(5) * three_pi_half_minus_one() * eps;
    out.Q0.w = Interval(2) / Interval(5) * eps;
    out.Q0.c = Interval(2) / C.sqrt5 + Interval(2) / C.sqrt10 * eps +
               Interval(18) / (Interval(5) * sqrt(Interval(50))) * e2;

    UBVec v{row_alpha_norm() * out.fhat1, row_omega_norm() * out.fhat1, out.fhatc};
    UBMat amp = ub_mat_add(ub_identity(), ub_scale(eps, ub_A0inv_A1()));
    UBVec corr = ub_mat_vec(amp, v);
    out.M_eps = corr.a / e2;
    out.Q = UBVec{out.Q0.a + corr.a, out.Q0.w + corr.w, out.Q0.c + corr.c};

    out.Zeps = Z_bound(eps, r, rho);
    UBVec Zr = ub_mat_vec(out.Zeps, rbar);
    out.kappa = imax(imax(Zr.a / rbar.a, Zr.w / rbar.w), Zr.c / rbar.c);
    if (!(out.kappa.hi < 1.0))
        throw VerificationError("I - Z not invertible: contraction rate >= 1");

    // X encloses (I - Z)^{-1} Q: finite Neumann sum plus the geometric tail in
    // the rbar-weighted norm.
    const int N = 64;
    UBVec X = out.Q, term = out.Q;
    for (int n = 1; n <= N; ++n) {
        term = ub_mat_vec(out.Zeps, term);
        X = UBVec{X.a + term.a, X.w + term.w, X.c + term.c};
    }
    Interval qnorm = imax(imax(out.Q.a / rbar.a, out.Q.w / rbar.w), out.Q.c / rbar.c);
    Interval kpow = out.kappa;
    for (int n = 1; n <= N; ++n) kpow = kpow * out.kappa; // kappa^{N+1}
    Interval tail_scale = kpow / (Interval(1) - out.kappa) * qnorm;
    X.a += Interval(0.0, (tail_scale * rbar.a).hi);
    X.w += Interval(0.0, (tail_scale * rbar.w).hi);
    X.c += Interval(0.0, (tail_scale * rbar.c).hi);

    out.Mp_eps = ub_mat_vec(out.Zeps, X).a / e2;
    return out;
}

Certificate certify_opnorms() {
    Certificate cert = base_certificate("opnorms");
    const Constants& C = Constants::get();
    try {
        OpNormTable t = verify_opnorms(64);
        auto closed = [&](const std::string& name, const Interval& got, const Interval& want,
                          const std::string& ineq) {
            bool ok = intersects(got, want) && width(got) < 1e-12;
            cert.checks.push_back(
                make_check("opnorms/" + name, ineq, ok, got, want, "operator-norm-table"));
        };
        closed("uhat", t.norm_Uhat, Interval(1.25), "||Uhat|| = 5/4 (max at k = 5)");
        closed("uhat-k", t.norm_UhatK, Interval(1) / C.sqrt5, "||Uhat K|| = 1/sqrt(5) (max at k = 2)");
        closed("a0star-inv", t.norm_A0star_inv, Interval(2) / (C.pi * C.sqrt5),
               "||A0*^{-1}|| = 2/(pi sqrt 5)");
        closed("a1-a0inv", t.norm_A1A0inv, Interval(2) * C.sqrt10 / Interval(5),
               "||A1 A0^{-1}|| = 2 sqrt(10)/5 (max at k = 2)");
        cert.checks.push_back(make_check("opnorms/a1star", "||A1*|| <= 2 pi",
                                         t.norm_A1star.hi <= (Interval(2) * C.pi).hi,
                                         t.norm_A1star, Interval(2) * C.pi,
                                         "operator-norm-table"));
        cert.checks.push_back(make_check("opnorms/l-omega", "||L_omega|| <= 4 uniformly",
                                         t.norm_Lomega.hi <= 4.0, t.norm_Lomega, Interval(4.0),
                                         "operator-norm-table"));
        const ABlocks& B = ABlocks::get();
        Interval fb = mat2_norm(mat2_mul(B.A12, B.A01_inv));
        cert.checks.push_back(make_check("opnorms/finite-block",
                                         "||A12 A01^{-1}||_2 < ||A1* A0*^{-1}||",
                                         fb.hi < t.norm_A1A0inv.lo, fb, t.norm_A1A0inv,
                                         "operator-norm-table"));
        Interval inj = (C.sqrt10 / Interval(4) - Interval(1e-6)) * t.norm_A1A0inv;
        cert.checks.push_back(make_check("opnorms/injectivity-margin",
                                         "eps ||A1 A0^{-1}|| < 1 for eps <= sqrt(10)/4 - 1e-6",
                                         inj.hi < 1.0, inj, Interval(1.0),
                                         "approximate-inverse-injectivity"));
    } catch (const VerificationError& e) {
        cert.checks.push_back(make_check("opnorms/scan", e.what(), false, Interval(0.0),
                                         Interval(0.0), "operator-norm-table"));
    }
    cert.finalize();
    return cert;
}

Certificate certify_contraction_case(const ParamCase& pc) {
    Certificate cert = base_certificate(pc.name);
    ContractionReport rep = check_contraction(pc.ball(), pc.scaled, pc.name);
    cert.checks = rep.checks;
    cert.finalize();
    return cert;
}

Certificate certify_omega_window(int max_depth) {
    Certificate cert = base_certificate("omega-window");
    cert.checks = check_omega_window(max_depth);
    cert.finalize();
    return cert;
}

Certificate certify_wright(const ParamTable& params, bool prereqs) {
    Certificate cert = base_certificate("wright");
    cert.assumptions = wright_assumptions();
    const Constants& C = Constants::get();

    if (prereqs) {
        cert.append(certify_contraction_case(params.bigbox_a));
        cert.append(certify_contraction_case(params.tight));
        cert.append(certify_omega_window());
    }

    GlobalBox box = wright_box();
    Interval eps(0.0, C.eps_star.hi);

    cert.checks.push_back(make_check_threshold("wright/eps-star", "eps* = mu/sqrt(2) <= 0.02886",
                                               le_threshold(C.eps_star, 0.02886), C.eps_star,
                                               0.02886, "amplitude-to-eps"));

    // 2 eps + ||ctilde|| <= (pi/(omega sqrt 3)) alpha mu (1+mu) <= 0.09 on the box
    FourierBoundConsts fc = fourier_bound_consts(box.omega_box);
    Interval amp = fc.sup_coeff * box.alpha_box * C.mu * (Interval(1) + C.mu);
    cert.checks.push_back(make_check_threshold("wright/ctilde-bound",
                                               "sup-norm Fourier bound <= 0.09",
                                               le_threshold(Interval(amp.hi), 0.09), amp, 0.09,
                                               "fourier-amplitude-bound"));
    Interval freq_margin = (Interval(2) * box.omega_box - box.alpha_box) / box.alpha_box;
    cert.checks.push_back(make_check("wright/rescaling-applicable",
                                     "Fourier bound < (2 omega - alpha)/alpha",
                                     amp.hi < freq_margin.lo, amp, freq_margin,
                                     "rescaled-coordinates-valid"));

    Interval bs = b_star(eps, box.alpha_box, box.omega_box);
    cert.checks.push_back(make_check_threshold("wright/b-star", "b* >= 0.364",
                                               ge_threshold(bs, 0.364), bs, 0.364,
                                               "a-priori-invertibility"));
    ZGap gap = z_gap(eps, bs);
    cert.checks.push_back(make_check_threshold("wright/z-plus", "z+ >= 0.72",
                                               ge_threshold(gap.z_plus, 0.72), gap.z_plus, 0.72,
                                               "a-priori-cone"));
    cert.checks.push_back(make_check("wright/dichotomy", "||ctilde|| <= 0.09 < z+",
                                     amp.hi <= 0.09 && 0.09 < gap.z_plus.lo, Interval(0.09),
                                     gap.z_plus, "a-priori-cone"));
    Interval c0 = z_minus_linear_coeff(C.eps_star, box.alpha_box, box.omega_box);
    cert.checks.push_back(make_check_threshold("wright/c0", "z^-(eps)/eps <= 0.0796",
                                               le_threshold(c0, 0.0796), c0, 0.0796,
                                               "small-branch-linear-bound"));
    Interval kcoef = (Interval(2) + sqr(c0)) / bs;
    cert.checks.push_back(make_check_threshold("wright/kinv-coefficient",
                                               "(2 + C0^2)/b* <= 5.52",
                                               le_threshold(kcoef, 5.52), kcoef, 5.52,
                                               "k-inverse-amplitude"));
    Interval kval = Interval(5.52) * C.eps_star;
    cert.checks.push_back(make_check_threshold("wright/kinv-value", "5.52 eps* <= 0.16",
                                               le_threshold(kval, 0.16), kval, 0.16,
                                               "k-inverse-amplitude"));

    // the four inclusion inequalities S subset B_eps(r, rho)
    Deltas d = Deltas::at(eps, UBVec{});
    Interval ra(params.bigbox_a.r[0]), rw(params.bigbox_a.r[1]), rc(params.bigbox_a.r[2]);
    Interval incl_a = Interval(0.0002) + d.da0;
    cert.checks.push_back(make_check("wright/inclusion-alpha", "0.0002 + |alphabar - pi/2| <= r_alpha",
                                     incl_a.hi <= ra.lo, incl_a, ra, "triangle-inclusion"));
    Interval incl_w = Interval(0.15) + d.dw0;
    cert.checks.push_back(make_check("wright/inclusion-omega", "0.15 + |omegabar - pi/2| <= r_omega",
                                     incl_w.hi <= rw.lo, incl_w, rw, "triangle-inclusion"));
    Interval incl_c = Interval(0.08) + d.dc0;
    cert.checks.push_back(make_check("wright/inclusion-c", "0.08 + ||cbar|| <= r_c",
                                     incl_c.hi <= rc.lo, incl_c, rc, "triangle-inclusion"));
    cert.checks.push_back(make_check("wright/inclusion-rho", "0.16 <= rho",
                                     0.16 <= params.bigbox_a.rho, Interval(0.16),
                                     Interval(params.bigbox_a.rho), "triangle-inclusion"));

    // nesting of the tight domain inside the big one identifies the two
    // solution families
    Interval e0a(params.bigbox_a.eps0);
    cert.checks.push_back(make_check("wright/eps-star-within-a", "eps* <= eps0(a)",
                                     C.eps_star.hi <= e0a.lo, C.eps_star, e0a,
                                     "nested-domains"));
    Interval worst_nest(0.0);
    for (int i = 0; i < 3; ++i) {
        Interval scaled = sqr(C.eps_star) * Interval(params.tight.r[i]);
        Interval slack = Interval(params.bigbox_a.r[i]) - scaled;
        worst_nest = i == 0 ? slack : Interval(std::fmin(worst_nest.lo, slack.lo),
                                               std::fmax(worst_nest.hi, slack.hi));
    }
    cert.checks.push_back(make_check("wright/nesting-radii", "eps*^2 rbar < r componentwise",
                                     worst_nest.lo > 0.0, worst_nest, Interval(0.0),
                                     "nested-domains"));
    cert.checks.push_back(make_check("wright/nesting-rho", "rho_tight <= rho_a",
                                     params.tight.rho <= params.bigbox_a.rho,
                                     Interval(params.tight.rho), Interval(params.bigbox_a.rho),
                                     "nested-domains"));

    cert.finalize();
    return cert;
}

Certificate certify_nofold(const ParamTable& params, bool prereqs) {
    Certificate cert = base_certificate("nofold");
    cert.assumptions = branch_assumptions();

    if (prereqs) cert.append(certify_contraction_case(params.tight));

    Interval eps0(params.tight.eps0);
    UBVec rbar{Interval(params.tight.r[0]), Interval(params.tight.r[1]),
               Interval(params.tight.r[2])};
    Interval rho(params.tight.rho);

    try {
        ImplicitData id = implicit_Q(eps0, rbar, rho);
        cert.checks.push_back(make_check("nofold/neumann-contraction",
                                         "kappa(Z_eps) < 1 in the rbar-weighted norm",
                                         id.kappa.hi < 1.0, id.kappa, Interval(1.0),
                                         "neumann-series"));

        // monotonicity of the correction constants on a grid, so the single
        // evaluation at eps0 covers the whole branch
        bool mono = true;
        Interval prevM(0.0), prevMp(0.0);
        for (double e : {0.02, 0.05, 0.08, 0.1}) {
            ImplicitData g = implicit_Q(Interval(e), rbar, rho);
            mono = mono && g.M_eps.lo > prevM.hi && g.Mp_eps.lo > prevMp.hi;
            prevM = g.M_eps;
            prevMp = g.Mp_eps;
        }
        cert.checks.push_back(make_check("nofold/correction-monotone",
                                         "M_eps, M'_eps nondecreasing on {0.02,0.05,0.08,0.1}",
                                         mono, prevM, prevMp, "monotone-corrections"));

        Interval lhs = Interval(2) / Interval(5) * three_pi_half_minus_one() * eps0 -
                       sqr(eps0) * (id.M_eps + id.Mp_eps);
        cert.checks.push_back(make_check("nofold/derivative-positive",
                                         "(2/5)(3 pi/2 - 1) eps0 - eps0^2 (M + M') > 0",
                                         lhs.lo > 0.0, lhs, Interval(0.0),
                                         "branch-derivative-sign"));
    } catch (const VerificationError& e) {
        cert.checks.push_back(make_check("nofold/neumann-contraction", e.what(), false,
                                         Interval(1.0), Interval(1.0), "neumann-series"));
    }

    Interval reach = Deltas::at(eps0, UBVec{}).da0 - sqr(eps0) * rbar.a;
    cert.checks.push_back(make_check_threshold("nofold/alpha-reach",
                                               "alphabar(0.1) - 0.01 rbar_alpha >= pi/2 + 6.830e-3",
                                               ge_threshold(reach, 6.830e-3), reach, 6.830e-3,
                                               "covered-alpha-range"));

    cert.finalize();
    return cert;
}

Certificate certify_uniqueness(const ParamTable& params, bool prereqs) {
    Certificate cert = base_certificate("uniqueness");

    if (prereqs) {
        cert.append(certify_contraction_case(params.bigbox_b));
        cert.append(certify_nofold(params, true));
    }

    GlobalBox box = uniqueness_box();
    Interval eps(0.0, 0.09);
    Interval eps9(0.09);

    Interval bs = b_star(eps, box.alpha_box, box.omega_box);
    cert.checks.push_back(make_check_threshold("uniqueness/b-star", "b* >= 0.31",
                                               ge_threshold(bs, 0.31), bs, 0.31,
                                               "a-priori-invertibility"));
    Interval kinv = eps9 * (Interval(2) + sqr(box.c_norm_max)) / bs;
    cert.checks.push_back(make_check_threshold("uniqueness/kinv", "eps (2 + ||c||^2)/b* <= 0.61",
                                               le_threshold(kinv, 0.61), kinv, 0.61,
                                               "k-inverse-amplitude"));

    // triangle inclusions of the eps-free set into B_eps(r_b, rho_b)
    Deltas d9 = Deltas::at(eps, UBVec{});
    struct Incl {
        const char* name;
        Interval need;
        double have;
    };
    for (const Incl& i :
         {Incl{"uniqueness/inclusion-alpha", Interval(0.00553) + d9.da0, params.bigbox_b.r[0]},
          Incl{"uniqueness/inclusion-omega", Interval(0.0924) + d9.dw0, params.bigbox_b.r[1]},
          Incl{"uniqueness/inclusion-c", box.c_norm_max + d9.dc0, params.bigbox_b.r[2]},
          Incl{"uniqueness/inclusion-rho", box.Kinv_norm_max, params.bigbox_b.rho}}) {
        cert.checks.push_back(make_check(i.name, "set bound + center offset <= radius",
                                         i.need.hi <= i.have, i.need, Interval(i.have),
                                         "triangle-inclusion"));
    }

    // tight-branch bounds keep the branch inside the hypothesis class
    UBVec rbar{Interval(params.tight.r[0]), Interval(params.tight.r[1]),
               Interval(params.tight.r[2])};
    Interval wdev = d9.dw0 + sqr(eps9) * rbar.w;
    cert.checks.push_back(make_check_threshold("uniqueness/branch-omega",
                                               "|omegahat - pi/2| <= 0.0924",
                                               le_threshold(wdev, 0.0924), wdev, 0.0924,
                                               "tight-branch-bounds"));
    Interval cdev = d9.dc0 + sqr(eps9) * rbar.c;
    cert.checks.push_back(make_check_threshold("uniqueness/branch-c", "||chat|| <= 0.30232",
                                               le_threshold(cdev, 0.30232), cdev, 0.30232,
                                               "tight-branch-bounds"));
    Interval exit = Deltas::at(eps9, UBVec{}).da0 - sqr(eps9) * rbar.a;
    cert.checks.push_back(make_check("uniqueness/exit-bound",
                                     "alphahat(0.09) - pi/2 > 0.00553", exit.lo > 0.00553,
                                     exit, Interval(0.00553), "branch-exits-the-set"));

    // function-space variant: ||y'||_L2 <= 0.302 forces the same class
    FourierBoundConsts fb = fourier_bound_consts(box.omega_box);
    Interval anorm = fb.l2_coeff * Interval(0.302);
    cert.checks.push_back(make_check_threshold("uniqueness/fourier-l2",
                                               "sqrt(pi/(6 omega)) 0.302 <= 0.18",
                                               le_threshold(Interval(anorm.hi), 0.18), anorm,
                                               0.18, "fourier-amplitude-bound"));
    Interval freq_margin = (Interval(2) * box.omega_box - box.alpha_box) / box.alpha_box;
    cert.checks.push_back(make_check("uniqueness/rescaling-applicable",
                                     "0.18 < (2 omega - alpha)/alpha",
                                     0.18 < freq_margin.lo, Interval(0.18), freq_margin,
                                     "rescaled-coordinates-valid"));
    ZGap gap = z_gap(eps, bs);
    cert.checks.push_back(make_check_threshold("uniqueness/z-plus", "z+ >= 0.595",
                                               ge_threshold(gap.z_plus, 0.595), gap.z_plus,
                                               0.595, "a-priori-cone"));
    cert.checks.push_back(make_check("uniqueness/dichotomy", "0.18 <= z+ selects the small branch",
                                     0.18 < gap.z_plus.lo, Interval(0.18), gap.z_plus,
                                     "a-priori-cone"));
    Interval c0 = z_minus_linear_coeff(eps9, box.alpha_box, box.omega_box);
    cert.checks.push_back(make_check_threshold("uniqueness/c0", "z^-(eps)/eps <= 0.30226",
                                               le_threshold(c0, 0.30226), c0, 0.30226,
                                               "small-branch-linear-bound"));
    cert.checks.push_back(make_check("uniqueness/c-norm-link", "0.30226 <= 0.30232",
                                     0.30226 <= 0.30232, Interval(0.30226), Interval(0.30232),
                                     "small-branch-linear-bound"));

    cert.finalize();
    return cert;
}

Certificate certify_all(const ParamTable& params, int jobs) {
    Certificate cert = base_certificate("all");
    cert.assumptions = wright_assumptions();
    for (const auto& a : branch_assumptions()) cert.assumptions.push_back(a);

    std::vector<std::function<Certificate()>> parts = {
        [] { return certify_opnorms(); },
        [&] { return certify_contraction_case(params.bigbox_a); },
        [&] { return certify_contraction_case(params.bigbox_b); },
        [&] { return certify_contraction_case(params.tight); },
        [] { return certify_omega_window(); },
        [&] { return certify_wright(params, false); },
        [&] { return certify_nofold(params, false); },
        [&] { return certify_uniqueness(params, false); },
    };

    std::vector<Certificate> results(parts.size());
    if (jobs > 1) {
        std::vector<std::future<Certificate>> futs;
        for (auto& p : parts) futs.push_back(std::async(std::launch::async, p));
        for (size_t i = 0; i < futs.size(); ++i) results[i] = futs[i].get();
    } else {
        for (size_t i = 0; i < parts.size(); ++i) results[i] = parts[i]();
    }
    for (const auto& r : results) {
        Certificate body = r;
        body.assumptions.clear(); // already merged above
        cert.append(body);
    }
    cert.finalize();
    return cert;
}

} // namespace wrightcert
