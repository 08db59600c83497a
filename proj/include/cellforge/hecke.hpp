#ifndef CELLFORGE_HECKE_HPP
#define CELLFORGE_HECKE_HPP

#include "cellforge/cells.hpp"

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

namespace cellforge {

// Length-2 paths x -> y, the index space of U^{(x,y)} and X^{(x,y)}.
struct PathSpace {
    int x = -1, y = -1;
    std::vector<std::pair<int, int>> paths; // (first edge, second edge)

    int index_of(int e1, int e2) const;
    // Printed matrices label rows by the intermediate vertex plus the tags
    // of any tagged edges on the path.
    std::string row_label(const Graph& g, int path_index) const;
};

// U^{(x,y)}[(r1,r2),(r3,r4)] =
//   sum_{lam: y->x} phi_x^{-1} phi_y^{-1} W(lam,r3,r4) conj(W(lam,r1,r2)).
struct HeckeOperator {
    PathSpace space;
    Eigen::MatrixXcd m;
};

HeckeOperator hecke_operator(const CellSystem& cs, int x, int y);

// All (x,y) pairs joined by a length-2 path, deterministic order.
std::vector<std::pair<int, int>> path_pairs(const Graph& g);

struct HeckeReport {
    double self_adjoint = 0.0; // max ||U - U*||_max
    double quadratic = 0.0;    // max ||U^2 - [2] U||_max
};

HeckeReport check_hecke(const CellSystem& cs);

// X^{(x,y)} = q^{2/3} I - q^{-1/3} U^{(x,y)} on each path space, with the
// principal branch q^{1/3} = exp(i pi / 3n).
struct Connection {
    GraphPtr graph;
    std::vector<HeckeOperator> blocks; // aligned with path_pairs(graph)
    std::vector<Eigen::MatrixXcd> x;   // connection matrices per block
    int block_of(int vx, int vy) const;
};

Connection connection(const CellSystem& cs);

// max over blocks of || X X* - I ||_max
double check_unitarity(const Connection& conn);

// Max residual of the Yang-Baxter equation over all boundary edge data
//   r1: a->b1, r2: b1->c, r3: a->b2, r4: b2->d, r5: d->e, r6: c->e,
// contracting three connection squares on each side.
double check_yang_baxter(const Connection& conn);

// The Wenzl sine weight for the elementary A(n) square at vertex
// lam = (l1, l2): directions j, l span the target, k selects the column.
// Zero when j = l. Independent of the cell machinery.
double wenzl_weight(int n, int l1, int l2, int j, int k, int l);

// max deviation between every Hecke matrix on A(n) and the sine-formula
// weights (Wenzl comparison).
double wenzl_check(const CellSystem& cs);

// Printed Hecke matrices, evaluated as quantum-number expressions per n and
// compared entry by entry against hecke_operator.
struct FixtureReport {
    int entries = 0;
    double max_deviation = 0.0;
    std::string worst; // description of the worst entry
};

FixtureReport fixture_check(const CellSystem& cs);

} // namespace cellforge

#endif
