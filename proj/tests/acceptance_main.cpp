// Acceptance battery: one pass/fail line per criterion, nonzero exit when
// anything fails.

#include "cellforge/acceptance.hpp"

#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
    cellforge::AcceptanceOptions opts;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--cli") == 0 && i + 1 < argc) opts.cli_path = argv[++i];
        if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) opts.seed = std::strtoull(argv[++i], nullptr, 10);
    }
    auto results = cellforge::run_acceptance(opts);
    bool all = true;
    for (const auto& r : results) {
        std::cout << "criterion " << r.index << " [" << (r.pass ? "PASS" : "FAIL") << "] " << r.name
                  << " (" << r.detail << ", " << r.seconds << " s)" << std::endl;
        all = all && r.pass;
    }
    std::cout << (all ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES PRESENT")
              << std::endl;
    return all ? 0 : 1;
}
