#ifndef CELLFORGE_ACCEPTANCE_HPP
#define CELLFORGE_ACCEPTANCE_HPP

#include "cellforge/cells.hpp"

#include <string>
#include <vector>

namespace cellforge {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct AcceptanceOptions {
    // Path to the CLI binary; when set, criterion 11 also exercises the
    // documented exit codes by spawning it.
    std::string cli_path;
    std::uint64_t seed = 7;
    int gauge_draws = 100;
    int classify_trials = 50;
};

// Every (graph, variant) pair in the verification battery.
std::vector<std::pair<GraphId, Variant>> battery_systems();

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

} // namespace cellforge

#endif
