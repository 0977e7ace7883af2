#pragma once

#include <string>
#include <vector>

#include "wrightcert/interval.hpp"

namespace wrightcert {

enum class Outcome { Pass, Fail, Inconclusive };

/// One named certified comparison with its enclosure endpoints.
struct CheckResult {
    std::string name;
    bool passed = false;
    Outcome outcome = Outcome::Fail;
    std::string inequality;   // human-readable statement of the comparison
    std::string lhs_lo, lhs_hi;  // shortest round-trip decimals of the enclosure
    std::string rhs_lo, rhs_hi;
    std::string anchor;       // stable identifier of the underlying fact
    long elapsed_ms = 0;
};

/// Externally established result taken as an axiom by a battery.
struct Assumption {
    std::string name;
    std::string statement;
};

struct Certificate {
    std::string tool_version;
    std::string parameter_table_version;
    std::string target;
    bool canonical = true;  // false when the parameter table was overridden
    std::vector<Assumption> assumptions;
    std::vector<CheckResult> checks;
    bool overall = false;
    bool inconclusive = false;

    void append(const Certificate& other);
    void finalize();  // recompute overall / inconclusive from checks
};

CheckResult make_check(const std::string& name, const std::string& inequality, bool passed,
                       const Interval& lhs, const Interval& rhs, const std::string& anchor);
CheckResult make_check_threshold(const std::string& name, const std::string& inequality,
                                 bool passed, const Interval& lhs, double tau,
                                 const std::string& anchor);

/// Deterministic JSON serialization; timings live in a trailing "metadata"
/// object which is excluded from the byte-identical reproducibility contract.
std::string certificate_to_json(const Certificate& cert);
std::string certificate_to_text(const Certificate& cert);

inline const char* kToolVersion = "wrightcert 1.0.0";
inline const char* kSchemaVersion = "1";

} // namespace wrightcert
