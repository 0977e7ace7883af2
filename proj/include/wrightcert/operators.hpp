#pragma once

#include <array>

#include "wrightcert/seqspace.hpp"

namespace wrightcert {

using Mat2 = std::array<std::array<Interval, 2>, 2>;

/// Nonnegative 3-vector of componentwise norm bounds, rows (alpha, omega, c).
struct UBVec {
    Interval a, w, c;
    Interval operator[](int i) const { return i == 0 ? a : (i == 1 ? w : c); }
};

/// Nonnegative 3x3 matrix of componentwise operator bounds.
struct UBMat {
    std::array<std::array<Interval, 3>, 3> m{};
    Interval& at(int i, int j) { return m[i][j]; }
    const Interval& at(int i, int j) const { return m[i][j]; }
};

UBVec ub_mat_vec(const UBMat& M, const UBVec& v);
UBMat ub_mat_mul(const UBMat& A, const UBMat& B);
UBMat ub_mat_add(const UBMat& A, const UBMat& B);
UBMat ub_identity();
UBMat ub_scale(const Interval& s, const UBMat& A);
// clamp tiny negative rounding slop on quantities that are nonnegative by construction
Interval nonneg(Interval x);

/// Element of R^2 x ell^1_0: the (alpha, omega) block plus modes k >= 2.
struct TripleVector {
    Interval alpha, omega;
    FourierVector modes;
};

/// The 2x2 blocks of the approximate derivative A = A_0 + eps A_1:
/// A01 acts (alpha,omega) -> mode 1, A12 -> mode 2.
struct ABlocks {
    Mat2 A01, A12, A01_inv;
    static const ABlocks& get();
};

// 2-norm of a 2x2 interval matrix from the closed-form singular value
// sqrt((trace(M^T M) + sqrt(trace^2 - 4 det^2)) / 2).
Interval mat2_norm(const Mat2& M);
Mat2 mat2_mul(const Mat2& A, const Mat2& B);

/// A x = A_0 x + eps A_1 x as an element of ell^1 (mode 1 populated).
FourierVector apply_A(const Interval& eps, const TripleVector& x);
FourierVector apply_A0(const TripleVector& x);
FourierVector apply_A1(const TripleVector& x);

/// Block inverse of A_0: mode 1 -> (alpha,omega) via A01^{-1}, modes >= 2
/// diagonally via (2/pi)/(ik + (-i)^k).
TripleVector apply_A0inv(const FourierVector& y);

/// A_1 A_0^{-1} on ell^1 (used by the A A^dagger identity).
FourierVector apply_A1A0inv(const FourierVector& y);

/// A^dagger y = A_0^{-1} y - eps A_0^{-1} A_1 A_0^{-1} y.
TripleVector apply_Adagger(const Interval& eps, const FourierVector& y);

/// Certified operator norms (Appendix-style sup-over-modes scans with
/// analytic tail domination).
struct OpNormTable {
    Interval norm_Uhat;        // = 5/4, maximized at k = 5
    Interval norm_UhatK;       // = 1/sqrt(5), maximized at k = 2
    Interval norm_A0star_inv;  // = 2/(pi sqrt(5))
    Interval norm_A1star;      // = sqrt(2) pi (<= 2 pi)
    Interval norm_Lomega;      // uniform-in-omega bound 4
    Interval norm_A1A0inv;     // = 2 sqrt(10)/5, maximized at k = 2
    UBMat ub_A0invA1;
};

/// Scans modes k <= k_check and proves the tail is dominated by a monotone
/// envelope; throws VerificationError if k_check is too small.
OpNormTable verify_opnorms(int k_check = 64);

/// Modulus of the diagonal entry of A_{0,*}^{-1} at mode k >= 2.
Interval a0star_inv_modulus(int k);
/// Shift coefficients of L_{omega_0}: -i + (-i)^k lands at k+1, i + (-i)^k at k-1.
CInterval lshift_plus_coef(int k);
CInterval lshift_minus_coef(int k);

/// Entrywise enclosure of the upper bound matrix for A_0^{-1} A_1.
UBMat ub_A0inv_A1();

} // namespace wrightcert
