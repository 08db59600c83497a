#ifndef CELLFORGE_GAUGE_HPP
#define CELLFORGE_GAUGE_HPP

#include "cellforge/cells.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cellforge {

// One unitary per parallel-edge class (ordered vertex pair carrying edges),
// indexed in edges_between() order. Scalars are 1x1 matrices.
struct GaugeFamily {
    std::map<std::pair<int, int>, Eigen::MatrixXcd> u;

    static GaugeFamily identity(const Graph& g);
    static GaugeFamily random(const Graph& g, std::uint64_t seed);

    // max over classes of ||u* u - I||_max
    double unitarity_defect() const;
};

// W1(tri via (x1,x2,x3)) = sum u(x1,y1) u(x2,y2) u(x3,y3) W2(tri via (y1,y2,y3)).
// Throws if some class is missing from `g` or a matrix fails unitarity.
CellSystem gauge_transform(const CellSystem& cs, const GaugeFamily& g, double tol = 1e-9);

// Gauge-invariant summary of a cell system, emitted in a fixed
// graph-determined order (two fingerprints are only comparable on the same
// graph):
//  - class_norms: per triangle class modulo parallel edges, the l2 norm of
//    its cell vector;
//  - frame_values: for type II frames with a1 = a4, a2 = a3 and all touched
//    edges in singleton classes, the per-summand products
//    W conj(W) W conj(W) (invariant under scalar gauges);
//  - gram_cycles: for each parallel class, Gram pairings of the cell
//    vectors over singleton completions, as |G| values plus oriented
//    3-cycle products (invariant under matrix gauges).
struct Fingerprint {
    std::vector<double> class_norms;
    std::vector<std::complex<double>> frame_values;
    std::vector<std::complex<double>> gram_cycles;
};

Fingerprint fingerprint(const CellSystem& cs);
bool fingerprint_close(const Fingerprint& a, const Fingerprint& b, double tol);
std::string fingerprint_digest(const Fingerprint& f, double rounding = 1e-6);

enum class EquivStatus { Equivalent, Inequivalent, Inconclusive };

struct EquivOptions {
    double mag_tol = 1e-8;       // |W| comparison
    double phase_tol = 1e-8;     // cycle-consistency check, radians
    double objective_tol = 1e-10; // numerical search acceptance
    int restarts = 20;
    int iterations = 500;
    std::uint64_t seed = 20240901;
};

struct EquivalenceResult {
    EquivStatus status = EquivStatus::Inconclusive;
    GaugeFamily witness;       // valid when Equivalent
    std::string obstruction;   // set when Inequivalent
    double objective = -1.0;   // best value when the numerical search ran
};

// Decides gauge equivalence of two cell systems on the same graph.
// Multiplicity-free graphs get an exact decision (magnitude comparison plus
// a phase system solved over the triangle-edge incidence lattice); graphs
// with parallel edges fall back to fingerprints and a numerical search over
// gauge families, with Inconclusive as an honest third outcome.
EquivalenceResult equivalent(const CellSystem& cs1, const CellSystem& cs2,
                             const EquivOptions& opts = {});

} // namespace cellforge

#endif
