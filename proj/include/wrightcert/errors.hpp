#pragma once

#include <stdexcept>
#include <string>

namespace wrightcert {

// Precondition violated on mathematical domain (division by an interval
// containing zero, sqrt of a negative interval, argument reduction range).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite-support cap exceeded; silently truncating would invalidate enclosures.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A certified verification step failed internally (e.g. tail of a sup-over-modes
// scan is not dominated by the scanned maximum; increase the scan length).
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The z^- / z^+ dichotomy is unavailable because b* > sqrt(2) eps fails.
struct GapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A hypothesis needed to even state a bound fails (e.g. C1*C2 >= 1 in the
// endomorphism constant).
struct InvalidRegimeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Floating-point Newton iteration failed to converge.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A bisection procedure exhausted its depth budget without a verdict.
struct InconclusiveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace wrightcert
