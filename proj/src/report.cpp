#include "cbw/report.hpp"

namespace cbw {

namespace {
const char* status_name(Severity s) {
    return s == Severity::Violation ? "VIOLATION" : "FINDING";
}
} // namespace

void ClaimReport::write_tsv(std::ostream& os) const {
    for (const auto& f : counterexamples)
        os << claim_id << '\t' << f.params << '\t' << status_name(f.severity)
           << '\t' << f.detail << '\n';
    os << claim_id << '\t' << range << '\t' << (pass() ? "PASS" : "FAIL")
       << '\t' << "counterexamples=" << counterexamples.size() << '\n';
}

void ClaimReport::write_text(std::ostream& os) const {
    os << (pass() ? "PASS " : "FAIL ") << claim_id << "  (" << range << ")";
    if (!pass()) os << "  " << counterexamples.size() << " counterexample(s)";
    os << '\n';
    for (const auto& f : counterexamples)
        os << "  " << status_name(f.severity) << "  " << f.params << "  " << f.detail << '\n';
}

} // namespace cbw
