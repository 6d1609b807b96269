#pragma once

#include <string>
#include <vector>

namespace extremal::verify {

// One verification criterion outcome.  `measured` compares against
// `threshold` under `comparison` ("<=" or ">="); composite criteria fold
// their side conditions into `pass` and explain them in `detail`.
struct CriterionResult {
    std::string id;
    std::string description;
    double measured = 0.0;
    double threshold = 0.0;
    std::string comparison = "<=";
    bool pass = false;
    double seconds = 0.0;
    std::string detail;
};

std::vector<std::string> criterion_ids();

// `threshold_scale` multiplies every threshold (a testing hook for forcing
// failures); 1.0 is the contractual run.
CriterionResult run_criterion(const std::string& id, double threshold_scale = 1.0);

// Runs every criterion whose id contains `only_filter` (all when empty).
std::vector<CriterionResult> run_selected(const std::string& only_filter = "",
                                          double threshold_scale = 1.0);

}  // namespace extremal::verify
