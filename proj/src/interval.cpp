#include "wrightcert/interval.hpp"

#include <array>
#include <charconv>
#include <cstdint>

namespace wrightcert {

namespace {

// 1/n! enclosures, built by interval division so they stay rigorous past the
// point where n! is no longer exactly representable.
const Interval& inv_fact(int n) {
    static const std::array<Interval, 24> table = [] {
        std::array<Interval, 24> t;
        t[0] = Interval(1.0);
        for (int i = 1; i < static_cast<int>(t.size()); ++i)
            t[i] = t[i - 1] / Interval(static_cast<double>(i));
        return t;
    }();
    return table.at(static_cast<size_t>(n));
}

constexpr double kArgBound = 1024.0;   // |x| <= 2^10 for argument reduction
constexpr double kReducedBound = 0.81; // reduced arguments live in [-pi/4, pi/4] plus slack

// sin on a reduced interval: odd Taylor polynomial through y^19 plus the
// Lagrange remainder |y|^21/21!.
Interval sin_reduced(const Interval& y) {
    Interval y2 = sqr(y);
    Interval acc = -inv_fact(19); // coefficient of y^18 in P(y^2), sign (-1)^9
    for (int j = 8; j >= 0; --j) {
        Interval c = inv_fact(2 * j + 1);
        acc = (j % 2 == 0 ? c : -c) + y2 * acc;
    }
    Interval r = y * acc;
    double m = mag(y);
    Interval rem = Interval(m) * Interval(m);
    Interval p = Interval(m);
    for (int i = 0; i < 10; ++i) p = p * rem; // m^21
    double bound = (p * inv_fact(21)).hi;
    return r + Interval(-bound, bound);
}

// cos on a reduced interval: even Taylor polynomial through y^20 plus |y|^22/22!.
Interval cos_reduced(const Interval& y) {
    Interval y2 = sqr(y);
    Interval acc = inv_fact(20); // sign (-1)^10 = +
    for (int j = 9; j >= 0; --j) {
        Interval c = inv_fact(2 * j);
        acc = (j % 2 == 0 ? c : -c) + y2 * acc;
    }
    double m = mag(y);
    Interval p = Interval(1.0);
    Interval m2 = Interval(m) * Interval(m);
    for (int i = 0; i < 11; ++i) p = p * m2; // m^22
    double bound = (p * inv_fact(22)).hi;
    return acc + Interval(-bound, bound);
}

// x = q*(pi/2) + y with y enclosed; q chosen so |y| stays within the Taylor range.
Interval reduce_pi_half(double x, long long& quadrant) {
    const Constants& C = Constants::get();
    long long q = std::llround(x * 0.63661977236758138); // 2/pi, approximate is fine
    Interval y = Interval(x) - Interval(static_cast<double>(q)) * C.pi_half;
    if (mag(y) > kReducedBound)
        throw DomainError("trig argument reduction failed");
    quadrant = ((q % 4) + 4) % 4;
    return y;
}

Interval sin_point(double x) {
    long long q;
    Interval y = reduce_pi_half(x, q);
    switch (q) {
        case 0: return sin_reduced(y);
        case 1: return cos_reduced(y);
        case 2: return -sin_reduced(y);
        default: return -cos_reduced(y);
    }
}

Interval cos_point(double x) {
    long long q;
    Interval y = reduce_pi_half(x, q);
    switch (q) {
        case 0: return cos_reduced(y);
        case 1: return -sin_reduced(y);
        case 2: return -cos_reduced(y);
        default: return sin_reduced(y);
    }
}

Interval clamp_unit(Interval r) {
    r.lo = std::fmax(r.lo, -1.0);
    r.hi = std::fmin(r.hi, 1.0);
    return r;
}

void check_trig_arg(const Interval& a) {
    if (!a.is_finite() || mag(a) > kArgBound)
        throw DomainError("trig argument outside reduction range [-2^10, 2^10]");
}

// exp on |y| <= 0.35: Taylor through y^17 plus e^{|y|} |y|^18/18! remainder.
Interval exp_reduced(const Interval& y) {
    Interval acc = inv_fact(17);
    for (int j = 16; j >= 0; --j) acc = inv_fact(j) + y * acc;
    double m = mag(y);
    Interval p = Interval(m);
    Interval mi(m);
    for (int i = 0; i < 17; ++i) p = p * mi; // m^18
    double bound = (Interval(1.5) * p * inv_fact(18)).hi; // e^{0.35} < 1.5
    return acc + Interval(-bound, bound);
}

Interval exp_point(double x) {
    const Constants& C = Constants::get();
    long long k = std::llround(x * 1.4426950408889634); // 1/ln2
    Interval y = Interval(x) - Interval(static_cast<double>(k)) * C.ln2;
    if (mag(y) > 0.36) throw DomainError("exp argument reduction failed");
    Interval e = exp_reduced(y);
    double lo = std::ldexp(e.lo, static_cast<int>(k));
    double hi = std::ldexp(e.hi, static_cast<int>(k));
    if (!std::isfinite(hi)) throw DomainError("exp overflow");
    // ldexp is exact on normal results; widen if we fell into the subnormals
    if (lo != 0.0 && std::fabs(lo) < std::numeric_limits<double>::min()) lo = rnd::next_down(lo);
    if (hi != 0.0 && std::fabs(hi) < std::numeric_limits<double>::min()) hi = rnd::next_up(hi);
    return {lo, hi};
}

} // namespace

Interval sin(const Interval& a) {
    check_trig_arg(a);
    const Constants& C = Constants::get();
    if (width(a) >= 7.0) return {-1.0, 1.0};
    Interval r = hull(sin_point(a.lo), sin_point(a.hi));
    // widen to +-1 across any enclosed critical point pi/2 + n*pi
    long long n_lo = static_cast<long long>(std::floor(a.lo / 3.141592653589793 - 0.5)) - 1;
    long long n_hi = static_cast<long long>(std::ceil(a.hi / 3.141592653589793 - 0.5)) + 1;
    for (long long n = n_lo; n <= n_hi; ++n) {
        Interval crit = C.pi_half + Interval(static_cast<double>(n)) * C.pi;
        if (intersects(crit, a)) {
            if (n % 2 == 0) r.hi = 1.0;
            else r.lo = -1.0;
        }
    }
    return clamp_unit(r);
}

Interval cos(const Interval& a) {
    check_trig_arg(a);
    const Constants& C = Constants::get();
    if (width(a) >= 7.0) return {-1.0, 1.0};
    Interval r = hull(cos_point(a.lo), cos_point(a.hi));
    long long n_lo = static_cast<long long>(std::floor(a.lo / 3.141592653589793)) - 1;
    long long n_hi = static_cast<long long>(std::ceil(a.hi / 3.141592653589793)) + 1;
    for (long long n = n_lo; n <= n_hi; ++n) {
        Interval crit = Interval(static_cast<double>(n)) * C.pi;
        if (intersects(crit, a)) {
            if (n % 2 == 0) r.hi = 1.0;
            else r.lo = -1.0;
        }
    }
    return clamp_unit(r);
}

Interval exp(const Interval& a) {
    if (!a.is_finite() || mag(a) > kArgBound)
        throw DomainError("exp argument outside reduction range");
    return {exp_point(a.lo).lo, exp_point(a.hi).hi};
}

const Constants& Constants::get() {
    // One-ulp brackets; each strictly contains the true value. The test suite
    // certifies every bracket with exact integer arithmetic (rational bound
    // pairs for pi and ln 2, integer squaring for the roots, a fixed-point
    // series for mu, and the squaring relation 2 eps*^2 = mu^2).
    static const Constants c = [] {
        Constants k;
        k.pi = {0x1.921fb54442d18p+1, 0x1.921fb54442d19p+1};
        k.pi_half = {k.pi.lo / 2, k.pi.hi / 2};
        k.two_pi = {k.pi.lo * 2, k.pi.hi * 2};
        k.ln2 = {0x1.62e42fefa39efp-1, 0x1.62e42fefa39f0p-1};
        k.sqrt2 = {0x1.6a09e667f3bccp+0, 0x1.6a09e667f3bcdp+0};
        k.sqrt5 = {0x1.1e3779b97f4a7p+1, 0x1.1e3779b97f4a8p+1};
        k.sqrt10 = {0x1.94c583ada5b52p+1, 0x1.94c583ada5b53p+1};
        k.mu = {0x1.4e52658f624a2p-5, 0x1.4e52658f624a3p-5};
        k.eps_star = {0x1.d8cd71681bbbbp-6, 0x1.d8cd71681bbbcp-6};
        return k;
    }();
    return c;
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

} // namespace wrightcert
