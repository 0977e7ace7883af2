#include "wrightcert/certificate.hpp"

#include <sstream>

#include "json.hpp"

namespace wrightcert {

namespace {

const char* outcome_str(Outcome o) {
    switch (o) {
        case Outcome::Pass: return "pass";
        case Outcome::Fail: return "fail";
        default: return "inconclusive";
    }
}

} // namespace

void Certificate::append(const Certificate& other) {
    for (const auto& a : other.assumptions) {
        bool seen = false;
        for (const auto& mine : assumptions) seen = seen || mine.name == a.name;
        if (!seen) assumptions.push_back(a);
    }
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

void Certificate::finalize() {
    overall = !checks.empty();
    inconclusive = false;
    for (const auto& c : checks) {
        overall = overall && c.passed;
        inconclusive = inconclusive || c.outcome == Outcome::Inconclusive;
    }
}

CheckResult make_check(const std::string& name, const std::string& inequality, bool passed,
                       const Interval& lhs, const Interval& rhs, const std::string& anchor) {
    CheckResult c;
    c.name = name;
    c.passed = passed;
    c.outcome = passed ? Outcome::Pass : Outcome::Fail;
    c.inequality = inequality;
    c.lhs_lo = format_double(lhs.lo);
    c.lhs_hi = format_double(lhs.hi);
    c.rhs_lo = format_double(rhs.lo);
    c.rhs_hi = format_double(rhs.hi);
    c.anchor = anchor;
    return c;
}

CheckResult make_check_threshold(const std::string& name, const std::string& inequality,
                                 bool passed, const Interval& lhs, double tau,
                                 const std::string& anchor) {
    return make_check(name, inequality, passed, lhs, Interval(tau), anchor);
}

std::string certificate_to_json(const Certificate& cert) {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["tool_version"] = cert.tool_version;
    j["parameter_table_version"] = cert.parameter_table_version;
    j["target"] = cert.target;
    j["canonical"] = cert.canonical;
    j["assumptions"] = nlohmann::ordered_json::array();
    for (const auto& a : cert.assumptions)
        j["assumptions"].push_back({{"name", a.name}, {"statement", a.statement}});
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : cert.checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["passed"] = c.passed;
        jc["outcome"] = outcome_str(c.outcome);
        jc["inequality"] = c.inequality;
        jc["lhs"] = {c.lhs_lo, c.lhs_hi};
        jc["rhs"] = {c.rhs_lo, c.rhs_hi};
        jc["anchor"] = c.anchor;
        j["checks"].push_back(jc);
    }
    j["overall"] = cert.overall;
    j["inconclusive"] = cert.inconclusive;
    // timings are reproducibility-exempt and therefore isolated here
    nlohmann::ordered_json meta;
    for (const auto& c : cert.checks) meta[c.name] = c.elapsed_ms;
    j["metadata"] = {{"elapsed_ms", meta}};
    return j.dump(2) + "\n";
}

std::string certificate_to_text(const Certificate& cert) {
    std::ostringstream os;
    os << cert.tool_version << "  target=" << cert.target
       << (cert.canonical ? "" : "  [non-canonical parameters]") << "\n";
    for (const auto& a : cert.assumptions)
        os << "  assumption " << a.name << ": " << a.statement << "\n";
    for (const auto& c : cert.checks) {
        const char* tag = c.outcome == Outcome::Pass ? "PASS"
                          : c.outcome == Outcome::Fail ? "FAIL"
                                                       : "INCONCLUSIVE";
        os << "  [" << tag << "] " << c.name << ": " << c.inequality << "   lhs=[" << c.lhs_lo
           << ", " << c.lhs_hi << "] rhs=[" << c.rhs_lo << ", " << c.rhs_hi << "] ("
           << c.elapsed_ms << " ms)\n";
    }
    os << (cert.inconclusive ? "INCONCLUSIVE" : cert.overall ? "OVERALL PASS" : "OVERALL FAIL")
       << " (" << cert.checks.size() << " checks)\n";
    return os.str();
}

} // namespace wrightcert
