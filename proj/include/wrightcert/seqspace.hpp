#pragma once

#include <map>

#include "wrightcert/interval.hpp"

namespace wrightcert {

/// Finite-support element of the sequence space: complex-interval coefficients
/// on modes k >= 1 with the implicit symmetric extension a_0 = 0,
/// a_{-k} = conj(a_k). Norm is 2 * sum |a_k| (Banach algebra under the
/// symmetric discrete convolution).
class FourierVector {
public:
    static constexpr int kMaxMode = 1 << 16;

    FourierVector() = default;

    void set(int k, const CInterval& v);
    void add_to(int k, const CInterval& v);
    /// Coefficient at mode k >= 1 (zero box if absent).
    CInterval at(int k) const;
    /// Signed-mode coefficient under the symmetric extension (k may be <= 0).
    CInterval at_signed(int k) const;

    const std::map<int, CInterval>& coeffs() const { return coeffs_; }
    bool empty() const { return coeffs_.empty(); }
    int max_mode() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }
    int min_mode() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }

    static FourierVector basis(int j);

private:
    std::map<int, CInterval> coeffs_;
};

FourierVector operator+(const FourierVector& a, const FourierVector& b);
FourierVector operator-(const FourierVector& a, const FourierVector& b);
FourierVector operator*(const CInterval& s, const FourierVector& a);
FourierVector operator*(const Interval& s, const FourierVector& a);

/// Rigorous enclosure of 2 * sum_k |a_k|.
Interval norm(const FourierVector& a);

/// Symmetric-extension discrete convolution, projected back to modes k >= 1.
FourierVector convolve(const FourierVector& a, const FourierVector& b);

FourierVector apply_K(const FourierVector& a);     // [K a]_k = a_k / k
FourierVector apply_Kinv(const FourierVector& a);  // [K^{-1} a]_k = k a_k
FourierVector apply_U(const Interval& omega, const FourierVector& a); // e^{-ik omega} a_k
FourierVector apply_shift_plus(const FourierVector& a);   // out_k = in_{k-1}, in_0 = 0
FourierVector apply_shift_minus(const FourierVector& a);  // out_k = in_{k+1}

/// L_omega = sigma^+ (e^{-i omega} I + U_omega) + sigma^- (e^{i omega} I + U_omega).
FourierVector apply_L(const Interval& omega, const FourierVector& a);

/// L at omega = pi/2 with exact coefficients (-i)^k; used by the operator blocks.
FourierVector apply_L_omega0(const FourierVector& a);

/// [Uhat c]_k = (1 - i k^{-1} e^{-ik pi/2})^{-1} c_k for k >= 2.
FourierVector apply_Uhat(const FourierVector& a);

} // namespace wrightcert
