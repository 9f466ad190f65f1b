#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pubsim {

struct CriterionResult {
    int number = 0;
    std::string title;
    bool passed = false;
    std::vector<std::string> notes;
    double seconds = 0.0;
};

struct ValidationReport {
    std::vector<CriterionResult> criteria;

    bool all_passed() const noexcept;
};

/// Run the validation suite: calibration identities, the analytic oracle
/// against the Monte Carlo engine, reference-scenario regression bands,
/// worker-count determinism, and the randomized property checks. Every
/// tolerance is pinned in code. only_criterion selects a single criterion
/// by number; 0 runs all ten.
ValidationReport run_acceptance_criteria(int workers, int only_criterion = 0);

/// One PASS/FAIL line per criterion plus detail lines for failures.
void print_report(const ValidationReport& report, std::ostream& out, bool verbose = false);

} // namespace pubsim
