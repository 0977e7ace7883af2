#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "wrightcert/errors.hpp"

namespace wrightcert {

/// Closed real interval [lo, hi] with binary64 endpoints.
///
/// Every operation returns an enclosure of the exact image of its operand
/// sets. Outward rounding is done by next-representable widening after
/// round-to-nearest primitives; an FMA / TwoSum residual test skips the
/// widening when the primitive happened to be exact. No rounding-mode
/// switching, so all operations are reentrant.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    explicit Interval(double v) : lo(v), hi(v) {}
    Interval(double l, double h) : lo(l), hi(h) {}

    bool contains(double x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool is_finite() const { return std::isfinite(lo) && std::isfinite(hi); }
    bool straddles_zero() const { return lo <= 0.0 && 0.0 <= hi; }
};

namespace rnd {

inline double next_down(double x) {
    return std::nextafter(x, -std::numeric_limits<double>::infinity());
}
inline double next_up(double x) {
    return std::nextafter(x, std::numeric_limits<double>::infinity());
}

// Knuth TwoSum residual: a + b == s + err exactly, for any finite a, b.
inline double two_sum_err(double a, double b, double s) {
    double bp = s - a;
    double ap = s - bp;
    return (a - ap) + (b - bp);
}

// Below this magnitude the FMA residual of a product/quotient may itself be
// inexact (underflow), so we widen unconditionally.
inline constexpr double kResidualGuard = 1e-290;

inline double add_down(double a, double b) {
    double s = a + b;
    if (!std::isfinite(s)) return s > 0 ? std::numeric_limits<double>::max() : s;
    return two_sum_err(a, b, s) < 0 ? next_down(s) : s;
}
inline double add_up(double a, double b) {
    double s = a + b;
    if (!std::isfinite(s)) return s < 0 ? -std::numeric_limits<double>::max() : s;
    return two_sum_err(a, b, s) > 0 ? next_up(s) : s;
}
inline double sub_down(double a, double b) { return add_down(a, -b); }
inline double sub_up(double a, double b) { return add_up(a, -b); }

inline double mul_down(double a, double b) {
    double p = a * b;
    if (!std::isfinite(p)) return p > 0 ? std::numeric_limits<double>::max() : p;
    if (p != 0.0 && std::fabs(p) < kResidualGuard) return next_down(p);
    return std::fma(a, b, -p) < 0 ? next_down(p) : p;
}
inline double mul_up(double a, double b) {
    double p = a * b;
    if (!std::isfinite(p)) return p < 0 ? -std::numeric_limits<double>::max() : p;
    if (p != 0.0 && std::fabs(p) < kResidualGuard) return next_up(p);
    return std::fma(a, b, -p) > 0 ? next_up(p) : p;
}

// true quotient vs computed q: a/b - q = -(q*b - a)/b, and fma gives the
// residual q*b - a exactly away from underflow.
inline double div_down(double a, double b) {
    double q = a / b;
    if (!std::isfinite(q)) return q > 0 ? std::numeric_limits<double>::max() : q;
    if (a != 0.0 && std::fabs(a) < kResidualGuard) return next_down(q);
    double t = std::fma(q, b, -a);
    bool q_above = (t != 0.0) && ((t > 0) == (b > 0));
    return q_above ? next_down(q) : q;
}
inline double div_up(double a, double b) {
    double q = a / b;
    if (!std::isfinite(q)) return q < 0 ? -std::numeric_limits<double>::max() : q;
    if (a != 0.0 && std::fabs(a) < kResidualGuard) return next_up(q);
    double t = std::fma(q, b, -a);
    bool q_below = (t != 0.0) && ((t > 0) != (b > 0));
    return q_below ? next_up(q) : q;
}

inline double sqrt_down(double x) {
    double r = std::sqrt(x);
    if (x < kResidualGuard) return r == 0.0 ? 0.0 : next_down(r);
    return std::fma(r, r, -x) > 0 ? next_down(r) : r;
}
inline double sqrt_up(double x) {
    double r = std::sqrt(x);
    if (x < kResidualGuard) return r == 0.0 ? 0.0 : next_up(r);
    return std::fma(r, r, -x) < 0 ? next_up(r) : r;
}

} // namespace rnd

inline Interval operator+(const Interval& a, const Interval& b) {
    return {rnd::add_down(a.lo, b.lo), rnd::add_up(a.hi, b.hi)};
}
inline Interval operator-(const Interval& a, const Interval& b) {
    return {rnd::sub_down(a.lo, b.hi), rnd::sub_up(a.hi, b.lo)};
}
inline Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

inline Interval operator*(const Interval& a, const Interval& b) {
    double l = std::fmin(std::fmin(rnd::mul_down(a.lo, b.lo), rnd::mul_down(a.lo, b.hi)),
                         std::fmin(rnd::mul_down(a.hi, b.lo), rnd::mul_down(a.hi, b.hi)));
    double h = std::fmax(std::fmax(rnd::mul_up(a.lo, b.lo), rnd::mul_up(a.lo, b.hi)),
                         std::fmax(rnd::mul_up(a.hi, b.lo), rnd::mul_up(a.hi, b.hi)));
    return {l, h};
}

inline Interval operator/(const Interval& a, const Interval& b) {
    if (b.straddles_zero()) throw DomainError("interval division by interval containing 0");
    double l = std::fmin(std::fmin(rnd::div_down(a.lo, b.lo), rnd::div_down(a.lo, b.hi)),
                         std::fmin(rnd::div_down(a.hi, b.lo), rnd::div_down(a.hi, b.hi)));
    double h = std::fmax(std::fmax(rnd::div_up(a.lo, b.lo), rnd::div_up(a.lo, b.hi)),
                         std::fmax(rnd::div_up(a.hi, b.lo), rnd::div_up(a.hi, b.hi)));
    return {l, h};
}

inline Interval& operator+=(Interval& a, const Interval& b) { a = a + b; return a; }
inline Interval& operator-=(Interval& a, const Interval& b) { a = a - b; return a; }
inline Interval& operator*=(Interval& a, const Interval& b) { a = a * b; return a; }

inline Interval sqrt(const Interval& a) {
    if (a.lo < 0.0) throw DomainError("interval sqrt of interval with negative lower endpoint");
    return {rnd::sqrt_down(a.lo), rnd::sqrt_up(a.hi)};
}

inline Interval abs(const Interval& a) {
    if (a.straddles_zero()) return {0.0, std::fmax(-a.lo, a.hi)};
    return a.hi < 0.0 ? Interval(-a.hi, -a.lo) : a;
}

// Tighter than a*a for intervals straddling zero.
inline Interval sqr(const Interval& a) {
    Interval m = abs(a);
    return {rnd::mul_down(m.lo, m.lo), rnd::mul_up(m.hi, m.hi)};
}

inline Interval hull(const Interval& a, const Interval& b) {
    return {std::fmin(a.lo, b.lo), std::fmax(a.hi, b.hi)};
}
inline Interval imax(const Interval& a, const Interval& b) {
    return {std::fmax(a.lo, b.lo), std::fmax(a.hi, b.hi)};
}
inline bool intersects(const Interval& a, const Interval& b) {
    return a.lo <= b.hi && b.lo <= a.hi;
}
inline double width(const Interval& a) { return rnd::sub_up(a.hi, a.lo); }
inline double midpoint(const Interval& a) { return 0.5 * (a.lo + a.hi); }
// Largest / smallest absolute value over the interval.
inline double mag(const Interval& a) { return std::fmax(std::fabs(a.lo), std::fabs(a.hi)); }
inline double mig(const Interval& a) {
    return a.straddles_zero() ? 0.0 : std::fmin(std::fabs(a.lo), std::fabs(a.hi));
}

// Certified one-sided comparisons. Decimal claim thresholds are widened by one
// ulp on the conservative side, so the comparison is valid for the real value
// the literal denotes regardless of the direction of its parse rounding.
inline bool certainly_le(const Interval& x, const Interval& y) { return x.hi <= y.lo; }
inline bool certainly_lt(const Interval& x, const Interval& y) { return x.hi < y.lo; }
inline bool certainly_negative(const Interval& x) { return x.hi < 0.0; }
inline bool certainly_positive(const Interval& x) { return x.lo > 0.0; }
inline bool le_threshold(const Interval& x, double tau) { return x.hi <= rnd::next_down(tau); }
inline bool ge_threshold(const Interval& x, double tau) { return x.lo >= rnd::next_up(tau); }

Interval sin(const Interval& a);
Interval cos(const Interval& a);
Interval exp(const Interval& a);

/// Rectangular complex interval: encloses every z with Re z in re, Im z in im.
struct CInterval {
    Interval re, im;

    CInterval() = default;
    CInterval(Interval r, Interval i) : re(r), im(i) {}
    explicit CInterval(double r, double i = 0.0) : re(r), im(i) {}
};

inline CInterval operator+(const CInterval& a, const CInterval& b) {
    return {a.re + b.re, a.im + b.im};
}
inline CInterval operator-(const CInterval& a, const CInterval& b) {
    return {a.re - b.re, a.im - b.im};
}
inline CInterval operator-(const CInterval& a) { return {-a.re, -a.im}; }
inline CInterval operator*(const CInterval& a, const CInterval& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline CInterval operator*(const Interval& s, const CInterval& z) {
    return {s * z.re, s * z.im};
}
inline CInterval& operator+=(CInterval& a, const CInterval& b) { a = a + b; return a; }
inline CInterval conj(const CInterval& z) { return {z.re, -z.im}; }
inline CInterval mul_i(const CInterval& z) { return {-z.im, z.re}; }
inline Interval cabs(const CInterval& z) { return sqrt(sqr(z.re) + sqr(z.im)); }
inline CInterval recip(const CInterval& z) {
    Interval d = sqr(z.re) + sqr(z.im);
    if (d.straddles_zero()) throw DomainError("complex reciprocal of box containing 0");
    return {z.re / d, -(z.im / d)};
}
inline CInterval operator/(const CInterval& a, const CInterval& b) { return a * recip(b); }
inline bool contains(const CInterval& box, double re, double im) {
    return box.re.contains(re) && box.im.contains(im);
}

/// e^{-i omega} = (cos omega, -sin omega).
inline CInterval cexp_minus_i_omega(const Interval& omega) {
    return {cos(omega), -sin(omega)};
}

// (-i)^k, exact.
inline CInterval minus_i_pow(long long k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return CInterval(1.0, 0.0);
        case 1: return CInterval(0.0, -1.0);
        case 2: return CInterval(-1.0, 0.0);
        default: return CInterval(0.0, 1.0);
    }
}

/// Verified enclosures of the constants used by the bounds. Each bracket is
/// one ulp wide and strictly contains the true value; the test suite
/// re-derives every bracket with exact integer arithmetic.
struct Constants {
    Interval pi;
    Interval pi_half;
    Interval two_pi;
    Interval ln2;
    Interval sqrt2;
    Interval sqrt5;
    Interval sqrt10;
    Interval mu;        // e^{1/25} - 1
    Interval eps_star;  // mu / sqrt(2)

    static const Constants& get();
};

std::string format_double(double v);  // shortest round-trip decimal

} // namespace wrightcert
