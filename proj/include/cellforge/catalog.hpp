#ifndef CELLFORGE_CATALOG_HPP
#define CELLFORGE_CATALOG_HPP

#include "cellforge/graph.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cellforge {

enum class Family { A, D, Astar, Dstar, E8, E8star, E1_12, E2_12, E5_12, E24, E4_12 };

struct GraphId {
    Family family = Family::A;
    int n = 0; // Coxeter label for the parametric families, fixed otherwise

    std::string display() const;
};

// Requested graph exists in the literature but its cells were never
// determined (E4(12)); mapped to a dedicated CLI exit code.
struct UnsupportedGraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string family_name(Family f);

// Selector grammar: FAMILY[:n], e.g. "A:6", "Astar:7", "D:9", "E1:12",
// "E8star", "E24". Case-insensitive; "*" accepted for "star".
GraphId parse_selector(const std::string& s);

GraphPtr build_graph(Family family, int n = 0);
inline GraphPtr build_graph(const GraphId& id) { return build_graph(id.family, id.n); }

// Every graph the acceptance battery runs over, with n clamped to
// [min_n, max_n] per family range.
std::vector<GraphId> catalog(int min_n = 4, int max_n = 12);

// Z3 orbifold of a simple graph under an order-3 vertex automorphism.
// Non-fixed orbits collapse to a single vertex; each fixed vertex splits
// into three copies carrying a third of its weight. Edge orbits collapse;
// edges at a fixed vertex fan out over the three copies.
struct OrbifoldResult {
    GraphPtr quotient;
    GraphPtr base;
    std::vector<int> rho;                     // the rotation, by base vertex id
    std::vector<int> vertex_image;            // base id -> quotient id (-1 for fixed)
    std::vector<std::array<int, 3>> copies;   // per fixed base vertex: quotient ids
    std::vector<int> fixed_vertices;          // base ids
    std::vector<std::vector<int>> edge_lifts; // quotient edge -> base edges
};

using OrbifoldTagNamer = std::function<std::string(int bunch_size, int position)>;

OrbifoldResult z3_orbifold(GraphPtr base, const std::vector<int>& rotation,
                           const std::string& quotient_name = "",
                           const OrbifoldTagNamer& namer = {});

// The rotation (l1,l2) -> (n-3-l1-l2, l1) of A(n), as a vertex permutation
// of build_graph(Family::A, n).
std::vector<int> a_graph_rotation(const Graph& a);

// The rotation of E2(12) fixing i, j, k and cycling p_l, q_l, r_l.
std::vector<int> e2_graph_rotation(const Graph& e2);

// Internal helper shared with the cell constructors: the orbifold that
// produces the catalog D(n) from A(n), with the double edge tagged g/g'.
OrbifoldResult d_graph_orbifold(int n);

} // namespace cellforge

#endif
