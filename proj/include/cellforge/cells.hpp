#ifndef CELLFORGE_CELLS_HPP
#define CELLFORGE_CELLS_HPP

#include "cellforge/catalog.hpp"
#include "cellforge/graph.hpp"
#include "cellforge/qnum.hpp"

#include <complex>
#include <string>
#include <vector>

namespace cellforge {

enum class Variant { Default, Conjugate, Plus, Minus };

std::string variant_name(Variant v);
Variant parse_variant(const std::string& s);

// Which variants construct_cells accepts for a family. The two-solution
// families (A(2n)*, D(2n)*, E1(12), E2(12)) take Plus/Minus, the D(3k)
// orbifolds take Default/Conjugate, everything else Default only.
std::vector<Variant> legal_variants(Family family, int n);

// A cell system: one complex number per oriented triangle of the graph,
// total on triangles() with explicit zeros.
struct CellSystem {
    GraphPtr graph;
    GraphId id;
    Variant variant = Variant::Default;
    std::vector<std::complex<double>> w; // by triangle index

    const std::complex<double>& value(int triangle_index) const {
        return w[static_cast<size_t>(triangle_index)];
    }
    const std::complex<double>& value(int e0, int e1, int e2) const {
        return w[static_cast<size_t>(graph->triangle_index(e0, e1, e2))];
    }
};

// Closed-form cell system for a catalog graph.
// `precision` selects the qnum evaluation width.
CellSystem construct_cells(Family family, int n = 0, Variant variant = Variant::Default,
                           int precision = 53);
CellSystem construct_cells(const GraphId& id, Variant variant = Variant::Default,
                           int precision = 53) = delete; // avoid ambiguity
CellSystem construct_cells_id(const GraphId& id, Variant variant = Variant::Default,
                              int precision = 53);

CellSystem conjugate(const CellSystem& cs);

// Max residual of the type I frame equation
//   sum_{beta: b->c, gamma: c->a} W(alpha,beta,gamma) conj(W(alpha',beta,gamma))
//     = delta_{alpha,alpha'} [2] phi_a phi_b
// over all type I frames (alpha, alpha': a -> b).
double verify_type_i(const CellSystem& cs);

// Max residual of the type II frame equation over all frames
// (a1: a->b, a2: c->b, a3: c->d, a4: a->d):
//   sum_{x, beta: b->x, delta: d->x, g1: x->a, g2: x->c} phi_x^{-1}
//       W(a1,beta,g1) conj(W(a2,beta,g2)) W(a3,delta,g2) conj(W(a4,delta,g1))
//     = delta_{a1,a2} delta_{a3,a4} phi_a phi_b phi_d
//       + delta_{a1,a4} delta_{a2,a3} phi_a phi_b phi_c.
double verify_type_ii(const CellSystem& cs);

// Sum of squared frame residuals (both types), the solver's objective
// evaluated on an arbitrary cell assignment.
double frame_objective(const CellSystem& cs);

// Triangle lookup by vertex labels, for tests and fixtures. `tags` filters
// on the edge tags the triangle must use (e.g. {"g"} or {"a","b'"}); empty
// matches any. Throws unless exactly one triangle matches.
int triangle_by_labels(const Graph& g, const std::vector<std::string>& vertex_labels,
                       const std::vector<std::string>& tags = {});

std::complex<double> cell_by_labels(const CellSystem& cs,
                                    const std::vector<std::string>& vertex_labels,
                                    const std::vector<std::string>& tags = {});

// The quantum-number context of a cell system's graph.
inline QContext graph_context(const Graph& g, int precision = 53) {
    return QContext::root_of_unity(g.coxeter_n(), precision);
}

} // namespace cellforge

#endif
