#include "wrightcert/operators.hpp"

namespace wrightcert {

namespace {

const CInterval kOne(1.0, 0.0);

// ik + (-i)^k, the diagonal symbol of (2/pi) A_{0,*}
CInterval a0star_symbol(int k) {
    return CInterval(Interval(0.0), Interval(static_cast<double>(k))) + minus_i_pow(k);
}

CInterval a0star_inv_diag(int k) {
    const Constants& C = Constants::get();
    return (Interval(2) / C.pi) * recip(a0star_symbol(k));
}


CInterval ic(const Mat2& M, const Interval& a, const Interval& w) {
    return CInterval(M[0][0] * a + M[0][1] * w, M[1][0] * a + M[1][1] * w);
}

void require_modes_ge2(const FourierVector& c) {
    if (!c.empty() && c.min_mode() < 2)
        throw DomainError("triple c-component must be supported on modes k >= 2");
}

// |u_k| = |1 - i k^{-1} (-i)^k|^{-1}, the per-mode norm of Uhat
Interval uhat_val(int k) {
    CInterval ik = mul_i(minus_i_pow(k));
    CInterval d = kOne - CInterval(ik.re / Interval(k), ik.im / Interval(k));
    return Interval(1) / cabs(d);
}

Interval uhatK_val(int k) { return uhat_val(k) / Interval(k); }

// (1/2) ||L_{omega_0} K Uhat e_k||, the per-mode norm of A_{1,*} A_{0,*}^{-1}
Interval a1a0_val(int k) {
    Interval coefs = cabs(lshift_plus_coef(k)) + cabs(lshift_minus_coef(k));
    return coefs * uhatK_val(k);
}

// (1/2) ||K Uhat pi_{>=2} L_{omega_0} e_k||, per-mode norm behind entry (3,3)
Interval kuhatL_val(int k) {
    Interval v = cabs(lshift_plus_coef(k)) * uhatK_val(k + 1);
    if (k >= 3) v += cabs(lshift_minus_coef(k)) * uhatK_val(k - 1);
    return v;
}

// (pi/2)(|sigma^+ coef| + |sigma^- coef|), per-mode norm of A_{1,*}; period 4 in k
Interval a1star_val(int k) {
    const Constants& C = Constants::get();
    return C.pi_half * (cabs(lshift_plus_coef(k)) + cabs(lshift_minus_coef(k)));
}

struct ScanResult {
    Interval max;
    int argmax;
};

template <typename F>
ScanResult scan_modes(F value, int k_check) {
    ScanResult r{value(2), 2};
    for (int k = 3; k <= k_check; ++k) {
        Interval v = value(k);
        if (v.hi > r.max.hi) r.argmax = k;
        r.max = imax(r.max, v);
    }
    return r;
}

void require_tail_dominated(const Interval& tail_env, const Interval& scan_max, const char* what) {
    if (!(tail_env.hi <= scan_max.lo))
        throw VerificationError(std::string("tail not dominated for ") + what +
                                "; increase k_check");
}

} // namespace

CInterval lshift_plus_coef(int k) { return CInterval(0.0, -1.0) + minus_i_pow(k); }
CInterval lshift_minus_coef(int k) { return CInterval(0.0, 1.0) + minus_i_pow(k); }

Interval a0star_inv_modulus(int k) {
    const Constants& C = Constants::get();
    return (Interval(2) / C.pi) / cabs(a0star_symbol(k));
}

Interval nonneg(Interval x) {
    x.lo = std::fmax(x.lo, 0.0);
    x.hi = std::fmax(x.hi, 0.0);
    return x;
}

UBVec ub_mat_vec(const UBMat& M, const UBVec& v) {
    UBVec r;
    r.a = M.at(0, 0) * v.a + M.at(0, 1) * v.w + M.at(0, 2) * v.c;
    r.w = M.at(1, 0) * v.a + M.at(1, 1) * v.w + M.at(1, 2) * v.c;
    r.c = M.at(2, 0) * v.a + M.at(2, 1) * v.w + M.at(2, 2) * v.c;
    return r;
}

UBMat ub_mat_mul(const UBMat& A, const UBMat& B) {
    UBMat r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r.at(i, j) = A.at(i, 0) * B.at(0, j) + A.at(i, 1) * B.at(1, j) + A.at(i, 2) * B.at(2, j);
    return r;
}

UBMat ub_mat_add(const UBMat& A, const UBMat& B) {
    UBMat r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.at(i, j) = A.at(i, j) + B.at(i, j);
    return r;
}

UBMat ub_identity() {
    UBMat r;
    for (int i = 0; i < 3; ++i) r.at(i, i) = Interval(1.0);
    return r;
}

UBMat ub_scale(const Interval& s, const UBMat& A) {
    UBMat r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.at(i, j) = s * A.at(i, j);
    return r;
}

const ABlocks& ABlocks::get() {
    static const ABlocks b = [] {
        const Constants& C = Constants::get();
        ABlocks x;
        x.A01 = {{{Interval(0.0), -C.pi_half}, {Interval(-1.0), Interval(1.0)}}};
        Interval fifth = Interval(1) / Interval(5);
        x.A12 = {{{fifth * Interval(-2), fifth * (Interval(2) - Interval(3) * C.pi_half)},
                  {fifth * Interval(-4), fifth * (Interval(2) * (Interval(2) + C.pi))}}};
        Interval m2pi = -(Interval(2) / C.pi);
        x.A01_inv = {{{m2pi, Interval(-1.0)}, {m2pi, Interval(0.0)}}};
        return x;
    }();
    return b;
}

Interval mat2_norm(const Mat2& M) {
    Interval t = sqr(M[0][0]) + sqr(M[0][1]) + sqr(M[1][0]) + sqr(M[1][1]);
    Interval det = M[0][0] * M[1][1] - M[0][1] * M[1][0];
    Interval disc = nonneg(sqr(t) - Interval(4) * sqr(det)); // = (s1^2 - s2^2)^2 >= 0
    return sqrt((t + sqrt(disc)) / Interval(2));
}

Mat2 mat2_mul(const Mat2& A, const Mat2& B) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = A[i][0] * B[0][j] + A[i][1] * B[1][j];
    return r;
}

FourierVector apply_A0(const TripleVector& x) {
    require_modes_ge2(x.modes);
    const Constants& C = Constants::get();
    const ABlocks& B = ABlocks::get();
    FourierVector r;
    r.add_to(1, ic(B.A01, x.alpha, x.omega));
    for (const auto& [k, v] : x.modes.coeffs())
        r.add_to(k, C.pi_half * (a0star_symbol(k) * v));
    return r;
}

FourierVector apply_A1(const TripleVector& x) {
    require_modes_ge2(x.modes);
    const Constants& C = Constants::get();
    const ABlocks& B = ABlocks::get();
    FourierVector r = C.pi_half * apply_L_omega0(x.modes);
    r.add_to(2, ic(B.A12, x.alpha, x.omega));
    return r;
}

FourierVector apply_A(const Interval& eps, const TripleVector& x) {
    FourierVector r = apply_A0(x);
    FourierVector a1 = apply_A1(x);
    for (const auto& [k, v] : a1.coeffs()) r.add_to(k, eps * v);
    return r;
}

TripleVector apply_A0inv(const FourierVector& y) {
    const ABlocks& B = ABlocks::get();
    TripleVector r;
    CInterval y1 = y.at(1);
    r.alpha = B.A01_inv[0][0] * y1.re + B.A01_inv[0][1] * y1.im;
    r.omega = B.A01_inv[1][0] * y1.re + B.A01_inv[1][1] * y1.im;
    for (const auto& [k, v] : y.coeffs())
        if (k >= 2) r.modes.set(k, a0star_inv_diag(k) * v);
    return r;
}

FourierVector apply_A1A0inv(const FourierVector& y) { return apply_A1(apply_A0inv(y)); }

TripleVector apply_Adagger(const Interval& eps, const FourierVector& y) {
    TripleVector t0 = apply_A0inv(y);
    TripleVector corr = apply_A0inv(apply_A1(t0));
    TripleVector r;
    r.alpha = t0.alpha - eps * corr.alpha;
    r.omega = t0.omega - eps * corr.omega;
    r.modes = t0.modes - (eps * corr.modes);
    return r;
}

UBMat ub_A0inv_A1() {
    const Constants& C = Constants::get();
    UBMat M;
    M.at(0, 2) = sqrt(Interval(2) + sqr(C.pi) / Interval(2)) / Interval(2);
    M.at(1, 2) = Interval(1) / C.sqrt2;
    M.at(2, 0) = Interval(8) / (Interval(5) * C.pi);
    M.at(2, 1) = Interval(2) * sqrt(Interval(16) + Interval(8) * C.pi + Interval(5) * sqr(C.pi)) /
                 (Interval(5) * C.pi);
    M.at(2, 2) = Interval(2) / C.sqrt5;
    return M;
}

OpNormTable verify_opnorms(int k_check) {
    if (k_check < 64) throw DomainError("verify_opnorms requires k_check >= 64");
    const Constants& C = Constants::get();
    OpNormTable t;

    // ||Uhat||: per-mode values |u_k|, envelope |u_k| <= k/(k-1) (reverse
    // triangle inequality), decreasing, so the tail past k_check is below
    // (k_check+1)/k_check.
    ScanResult su = scan_modes(uhat_val, k_check);
    Interval env_u = Interval(static_cast<double>(k_check + 1)) / Interval(static_cast<double>(k_check));
    require_tail_dominated(env_u, su.max, "Uhat");
    if (su.argmax != 5) throw VerificationError("Uhat maximizer is not k = 5");
    t.norm_Uhat = su.max;

    // ||Uhat K||: values |u_k|/k <= 1/(k-1)
    ScanResult sk = scan_modes(uhatK_val, k_check);
    Interval env_k = Interval(1) / Interval(static_cast<double>(k_check));
    require_tail_dominated(env_k, sk.max, "Uhat K");
    if (sk.argmax != 2) throw VerificationError("Uhat K maximizer is not k = 2");
    t.norm_UhatK = sk.max;

    t.norm_A0star_inv = (Interval(2) / C.pi) * t.norm_UhatK;

    // ||A_{1,*} A_{0,*}^{-1}||: values <= 4/(k-1); the operator norm of
    // A_1 A_0^{-1} is the max of this and the finite 2x2 block.
    ScanResult sa = scan_modes(a1a0_val, k_check);
    Interval env_a = Interval(4) / Interval(static_cast<double>(k_check));
    require_tail_dominated(env_a, sa.max, "A1 A0^{-1}");
    if (sa.argmax != 2) throw VerificationError("A1 A0^{-1} maximizer is not k = 2");
    const ABlocks& B = ABlocks::get();
    Interval finite_block = mat2_norm(mat2_mul(B.A12, B.A01_inv));
    if (!(finite_block.hi <= sa.max.lo))
        throw VerificationError("finite block unexpectedly dominates A1 A0^{-1}");
    t.norm_A1A0inv = sa.max;

    // ||A_{1,*}|| = (pi/2) sup_k (|sigma^+ coef| + |sigma^- coef|): the
    // coefficients depend on k mod 4 only, so scanning one full period k=2..5
    // covers every mode.
    Interval a1s = a1star_val(2);
    for (int k = 3; k <= 5; ++k) a1s = imax(a1s, a1star_val(k));
    t.norm_A1star = a1s;

    // ||L_omega|| <= 4 uniformly in omega: both diagonal factors have
    // per-mode modulus <= 2 and the shifts do not increase the norm. The lower
    // endpoint records the value attained at omega_0.
    Interval l0 = cabs(lshift_plus_coef(2)) + cabs(lshift_minus_coef(2));
    for (int k = 3; k <= 5; ++k) l0 = imax(l0, cabs(lshift_plus_coef(k)) + cabs(lshift_minus_coef(k)));
    t.norm_Lomega = Interval(l0.lo, 4.0);

    // Upper bound matrix for A_0^{-1} A_1; cross-check the scanned entry (3,3)
    // against the closed form 2/sqrt(5) (maximized at k = 3).
    ScanResult skl = scan_modes(kuhatL_val, k_check);
    Interval env_l = Interval(4) / Interval(static_cast<double>(k_check - 1));
    require_tail_dominated(env_l, skl.max, "K Uhat L");
    if (skl.argmax != 3) throw VerificationError("K Uhat L maximizer is not k = 3");
    t.ub_A0invA1 = ub_A0inv_A1();
    if (!intersects(skl.max, t.ub_A0invA1.at(2, 2)))
        throw VerificationError("scanned (c,c) entry disagrees with closed form 2/sqrt(5)");

    return t;
}

} // namespace wrightcert
