#include <algorithm>
#include <sstream>

#include "cullis/selftest.hpp"

namespace cullis::selftest {

bool Check::that(bool ok, const std::function<std::string()>& describe) {
    ++checks_;
    if (ok) return true;
    if (failures_++ == 0) first_failure_ = describe();
    return false;
}

CaseResult run_case(const Case& c, std::uint64_t seed) {
    CaseResult result{c.id, c.title, true, 0, 0, {}, {}};
    Check check;
    try {
        c.body(check, seed);
    } catch (const std::exception& e) {
        check.fail(std::string("exception: ") + e.what());
    }
    result.passed = check.ok();
    result.checks = check.checks();
    result.failures = check.failures();
    result.detail = check.first_failure();
    result.notes = check.notes();
    return result;
}

bool Report::passed() const {
    return std::all_of(results.begin(), results.end(), [](const CaseResult& r) { return r.passed; });
}

Report run_catalog(std::uint64_t seed) {
    Report report;
    report.seed = seed;
    for (const auto& list : {acceptance_cases(), property_cases()}) {
        for (const auto& c : list) report.results.push_back(run_case(c, seed));
    }
    std::sort(report.results.begin(), report.results.end(),
              [](const CaseResult& a, const CaseResult& b) { return a.id < b.id; });
    return report;
}

std::string render_line(const CaseResult& result) {
    std::ostringstream out;
    out << (result.passed ? "PASS " : "FAIL ") << result.id << ": " << result.title << " (" << result.checks
        << " checks";
    if (!result.passed) out << ", " << result.failures << " failed";
    out << ")";
    auto indent = [&out](const std::string& text) {
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) out << "\n    " << line;
    };
    for (const auto& note : result.notes) indent(note);
    if (!result.passed && !result.detail.empty()) indent(result.detail);
    return out.str();
}

std::string render(const Report& report) {
    std::ostringstream out;
    out << "cullis selftest, seed " << report.seed << '\n';
    std::size_t failed = 0;
    for (const auto& r : report.results) {
        out << render_line(r) << '\n';
        if (!r.passed) ++failed;
    }
    out << report.results.size() - failed << " passed, " << failed << " failed\n";
    return out.str();
}

}  // namespace cullis::selftest
