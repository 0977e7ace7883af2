#include "wrightcert/seqspace.hpp"

namespace wrightcert {

namespace {

bool is_zero_box(const CInterval& v) {
    return v.re.lo == 0 && v.re.hi == 0 && v.im.lo == 0 && v.im.hi == 0;
}

void check_mode(int k) {
    if (k < 1) throw DomainError("mode index must be >= 1");
    if (k > FourierVector::kMaxMode) throw CapacityError("mode index exceeds support cap 2^16");
}

} // namespace

void FourierVector::set(int k, const CInterval& v) {
    check_mode(k);
    if (is_zero_box(v))
        coeffs_.erase(k);
    else
        coeffs_[k] = v;
}

void FourierVector::add_to(int k, const CInterval& v) {
    check_mode(k);
    auto it = coeffs_.find(k);
    if (it == coeffs_.end())
        set(k, v);
    else
        it->second += v;
}

CInterval FourierVector::at(int k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? CInterval() : it->second;
}

CInterval FourierVector::at_signed(int k) const {
    if (k == 0) return CInterval();
    if (k > 0) return at(k);
    return conj(at(-k));
}

FourierVector FourierVector::basis(int j) {
    FourierVector e;
    e.set(j, CInterval(1.0, 0.0));
    return e;
}

FourierVector operator+(const FourierVector& a, const FourierVector& b) {
    FourierVector r = a;
    for (const auto& [k, v] : b.coeffs()) r.add_to(k, v);
    return r;
}

FourierVector operator-(const FourierVector& a, const FourierVector& b) {
    FourierVector r = a;
    for (const auto& [k, v] : b.coeffs()) r.add_to(k, -v);
    return r;
}

FourierVector operator*(const CInterval& s, const FourierVector& a) {
    FourierVector r;
    for (const auto& [k, v] : a.coeffs()) r.set(k, s * v);
    return r;
}

FourierVector operator*(const Interval& s, const FourierVector& a) {
    FourierVector r;
    for (const auto& [k, v] : a.coeffs()) r.set(k, s * v);
    return r;
}

Interval norm(const FourierVector& a) {
    Interval sum(0.0);
    for (const auto& [k, v] : a.coeffs()) sum += cabs(v);
    return Interval(2.0) * sum;
}

FourierVector convolve(const FourierVector& a, const FourierVector& b) {
    if (a.max_mode() + b.max_mode() > FourierVector::kMaxMode)
        throw CapacityError("convolution support exceeds cap 2^16");
    FourierVector r;
    for (const auto& [ka, va] : a.coeffs()) {
        for (const auto& [kb, vb] : b.coeffs()) {
            // signed index pairs (+-ka) + (+-kb), output restricted to k >= 1
            int k;
            k = ka + kb;
            if (k >= 1) r.add_to(k, va * vb);
            k = ka - kb;
            if (k >= 1) r.add_to(k, va * conj(vb));
            k = -ka + kb;
            if (k >= 1) r.add_to(k, conj(va) * vb);
            // -ka - kb is always <= -2
        }
    }
    return r;
}

FourierVector apply_K(const FourierVector& a) {
    FourierVector r;
    for (const auto& [k, v] : a.coeffs()) r.set(k, CInterval(v.re / Interval(k), v.im / Interval(k)));
    return r;
}

FourierVector apply_Kinv(const FourierVector& a) {
    FourierVector r;
    for (const auto& [k, v] : a.coeffs()) r.set(k, Interval(static_cast<double>(k)) * v);
    return r;
}

FourierVector apply_U(const Interval& omega, const FourierVector& a) {
    FourierVector r;
    for (const auto& [k, v] : a.coeffs()) {
        CInterval phase = cexp_minus_i_omega(Interval(static_cast<double>(k)) * omega);
        r.set(k, phase * v);
    }
    return r;
}

FourierVector apply_shift_plus(const FourierVector& a) {
    FourierVector r;
    for (const auto& [k, v] : a.coeffs()) r.set(k + 1, v);
    return r;
}

FourierVector apply_shift_minus(const FourierVector& a) {
    FourierVector r;
    for (const auto& [k, v] : a.coeffs())
        if (k >= 2) r.set(k - 1, v);
    return r;
}

FourierVector apply_L(const Interval& omega, const FourierVector& a) {
    CInterval em = cexp_minus_i_omega(omega);      // e^{-i omega}
    CInterval ep = conj(em);                       // e^{+i omega}
    FourierVector ua = apply_U(omega, a);
    FourierVector up, um;
    for (const auto& [k, v] : a.coeffs()) {
        up.add_to(k, em * v);
        um.add_to(k, ep * v);
    }
    up = up + ua;
    um = um + ua;
    return apply_shift_plus(up) + apply_shift_minus(um);
}

FourierVector apply_L_omega0(const FourierVector& a) {
    // sigma^+ (-i I + U_{pi/2}) + sigma^- (i I + U_{pi/2}), U_{pi/2} e_k = (-i)^k e_k
    FourierVector r;
    const CInterval mi(0.0, -1.0), pi_(0.0, 1.0);
    for (const auto& [k, v] : a.coeffs()) {
        CInterval u = minus_i_pow(k);
        r.add_to(k + 1, (mi + u) * v);
        if (k >= 2) r.add_to(k - 1, (pi_ + u) * v);
    }
    return r;
}

FourierVector apply_Uhat(const FourierVector& a) {
    FourierVector r;
    const CInterval one(1.0, 0.0);
    for (const auto& [k, v] : a.coeffs()) {
        if (k < 2) throw DomainError("Uhat requires support on modes k >= 2");
        // (1 - i (-i)^k / k)^{-1}
        CInterval d = one - CInterval(mul_i(minus_i_pow(k)).re / Interval(k),
                                      mul_i(minus_i_pow(k)).im / Interval(k));
        r.set(k, recip(d) * v);
    }
    return r;
}

} // namespace wrightcert
