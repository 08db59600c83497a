#ifndef CELLFORGE_GRAPH_HPP
#define CELLFORGE_GRAPH_HPP

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace cellforge {

struct Vertex {
    int id = -1;
    std::string label;
};

struct Edge {
    int id = -1;
    int source = -1;
    int target = -1;
    std::string tag; // empty unless the edge is one of a named parallel pair
};

// Oriented triangle: a closed path of three edges, stored as the
// lexicographically smallest rotation of its edge-id triple. A loop edge may
// occur up to three times.
struct Triangle {
    std::array<int, 3> e{-1, -1, -1};

    static Triangle canonical(int e0, int e1, int e2) {
        std::array<int, 3> rot[3] = {{e0, e1, e2}, {e1, e2, e0}, {e2, e0, e1}};
        Triangle t;
        t.e = rot[0];
        for (int i = 1; i < 3; ++i)
            if (rot[i] < t.e) t.e = rot[i];
        return t;
    }
    bool operator<(const Triangle& o) const { return e < o.e; }
    bool operator==(const Triangle& o) const { return e == o.e; }
};

// Pair of parallel edges (same source and endpoint); alpha == alpha_prime is
// allowed and enumerated.
struct TypeIFrame {
    int alpha = -1;
    int alpha_prime = -1;
};

// Four edges a1: a->b, a2: c->b, a3: c->d, a4: a->d. Degenerate frames
// (coincident edges, b == d, a == c) are included.
struct TypeIIFrame {
    int a1 = -1, a2 = -1, a3 = -1, a4 = -1;
};

// Immutable after construction (the catalog builders call freeze()).
class Graph {
public:
    Graph() = default;
    Graph(std::string name, int coxeter_n) : name_(std::move(name)), coxeter_n_(coxeter_n) {}

    int add_vertex(const std::string& label);
    int add_edge(int source, int target, const std::string& tag = "");
    void set_pf_weight(int vertex, double w);
    void set_distinguished(int vertex) { distinguished_ = vertex; }
    void freeze(); // builds the adjacency indexes and the triangle table

    const std::string& name() const { return name_; }
    int coxeter_n() const { return coxeter_n_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Vertex& vertex(int id) const { return vertices_[static_cast<size_t>(id)]; }
    const Edge& edge(int id) const { return edges_[static_cast<size_t>(id)]; }
    int distinguished() const { return distinguished_; }

    double pf_weight(int vertex) const { return pf_[static_cast<size_t>(vertex)]; }
    const std::vector<double>& pf_weights() const { return pf_; }

    const std::vector<int>& out_edges(int v) const { return out_[static_cast<size_t>(v)]; }
    const std::vector<int>& in_edges(int v) const { return in_[static_cast<size_t>(v)]; }
    const std::vector<int>& edges_between(int s, int t) const;

    int find_vertex(const std::string& label) const; // -1 if absent

    // All oriented triangles, each cyclic class once, in a deterministic
    // order. Available after freeze().
    const std::vector<Triangle>& triangles() const { return triangles_; }
    int triangle_index(const Triangle& t) const; // -1 if absent
    int triangle_index(int e0, int e1, int e2) const {
        return triangle_index(Triangle::canonical(e0, e1, e2));
    }

    std::vector<TypeIFrame> type_i_frames() const;
    std::vector<TypeIIFrame> type_ii_frames() const;

private:
    std::string name_;
    int coxeter_n_ = 0;
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<double> pf_;
    int distinguished_ = 0;
    bool frozen_ = false;

    std::vector<std::vector<int>> out_, in_;
    std::map<std::pair<int, int>, std::vector<int>> between_;
    std::vector<Triangle> triangles_;
    std::map<Triangle, int> triangle_idx_;
};

using GraphPtr = std::shared_ptr<const Graph>;

struct PFData {
    double eigenvalue = 0.0;
    std::vector<double> weights; // normalized: distinguished vertex = 1
    int iterations = 0;
};

// Power iteration for the Perron-Frobenius eigenvalue and two-sided
// eigenvector. Throws on non-convergence.
PFData pf_data(const Graph& g, int max_iterations = 200000, double tol = 1e-15);

} // namespace cellforge

#endif
