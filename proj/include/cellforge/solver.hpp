#ifndef CELLFORGE_SOLVER_HPP
#define CELLFORGE_SOLVER_HPP

#include "cellforge/cells.hpp"
#include "cellforge/gauge.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cellforge {

struct SolveOptions {
    int restarts = 20;
    int max_iterations = 400;
    double residual_tol = 1e-9; // verify_type_i/ii bound for "solved"
    std::uint64_t seed = 1;
    bool gauge_fixing = true; // pin a spanning set of freely gaugeable phases

    // Optional magnitude tying along a graph automorphism's triangle orbits
    // (the Z3-symmetric solution spaces of the D / D* families). Simple
    // graphs only.
    std::vector<int> tie_rotation;
};

struct SolveOutcome {
    bool solved = false;
    double objective = -1.0; // best squared residual norm reached
    int iterations = 0;      // across restarts
    int restarts_used = 0;
    std::optional<CellSystem> cells;
    std::optional<Fingerprint> fp;
};

// Least-squares search for a cell system on g: one complex variable per
// triangle, parametrized as (magnitude^(1/2), angle); the objective sums
// squared type I and type II frame residuals.
SolveOutcome solve_cells(GraphPtr g, const SolveOptions& opts = {});

struct SolutionBucket {
    Fingerprint fp;
    int count = 0;
    double best_objective = -1.0;
    CellSystem representative;
};

// Runs `trials` independent solves and buckets the solved outcomes by
// fingerprint (compared at `bucket_tol`).
std::vector<SolutionBucket> classify_solutions(GraphPtr g, int trials,
                                               const SolveOptions& opts = {},
                                               double bucket_tol = 1e-6);

} // namespace cellforge

#endif
