#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cbw {

enum class Severity {
    Violation, // contradicts a proven statement: fatal for the run
    Finding    // contradicts (or qualifies) a conjectured statement: reported only
};

struct Finding {
    std::string params;
    std::string detail;
    Severity severity = Severity::Violation;
};

// Outcome of one parameter sweep. pass() means no counterexamples at all;
// fatal() means at least one violation-level row.
struct ClaimReport {
    std::string claim_id;
    std::string range;
    std::vector<Finding> counterexamples;

    bool pass() const { return counterexamples.empty(); }
    bool fatal() const {
        for (const auto& f : counterexamples)
            if (f.severity == Severity::Violation) return true;
        return false;
    }
    std::size_t finding_count() const {
        std::size_t n = 0;
        for (const auto& f : counterexamples)
            if (f.severity == Severity::Finding) ++n;
        return n;
    }

    // Rows: claim_id <TAB> params <TAB> status <TAB> detail, LF-terminated.
    void write_tsv(std::ostream& os) const;
    void write_text(std::ostream& os) const;
};

} // namespace cbw
