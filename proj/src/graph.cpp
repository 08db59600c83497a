#include "cellforge/graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace cellforge {

int Graph::add_vertex(const std::string& label) {
    if (frozen_) throw std::logic_error("Graph: add_vertex after freeze");
    for (const auto& v : vertices_)
        if (v.label == label) throw std::invalid_argument("Graph: duplicate vertex label " + label);
    Vertex v;
    v.id = static_cast<int>(vertices_.size());
    v.label = label;
    vertices_.push_back(v);
    pf_.push_back(0.0);
    return v.id;
}

int Graph::add_edge(int source, int target, const std::string& tag) {
    if (frozen_) throw std::logic_error("Graph: add_edge after freeze");
    Edge e;
    e.id = static_cast<int>(edges_.size());
    e.source = source;
    e.target = target;
    e.tag = tag;
    edges_.push_back(e);
    return e.id;
}

void Graph::set_pf_weight(int vertex, double w) { pf_[static_cast<size_t>(vertex)] = w; }

void Graph::freeze() {
    if (frozen_) return;
    out_.assign(vertices_.size(), {});
    in_.assign(vertices_.size(), {});
    for (const auto& e : edges_) {
        out_[static_cast<size_t>(e.source)].push_back(e.id);
        in_[static_cast<size_t>(e.target)].push_back(e.id);
        between_[{e.source, e.target}].push_back(e.id);
    }

    std::set<Triangle> seen;
    for (const auto& e1 : edges_)
        for (int e2 : out_[static_cast<size_t>(e1.target)])
            for (int e3 : out_[static_cast<size_t>(edges_[static_cast<size_t>(e2)].target)])
                if (edges_[static_cast<size_t>(e3)].target == e1.source)
                    seen.insert(Triangle::canonical(e1.id, e2, e3));
    triangles_.assign(seen.begin(), seen.end());
    for (int i = 0; i < static_cast<int>(triangles_.size()); ++i)
        triangle_idx_[triangles_[static_cast<size_t>(i)]] = i;
    frozen_ = true;
}

const std::vector<int>& Graph::edges_between(int s, int t) const {
    static const std::vector<int> empty;
    auto it = between_.find({s, t});
    return it == between_.end() ? empty : it->second;
}

int Graph::find_vertex(const std::string& label) const {
    for (const auto& v : vertices_)
        if (v.label == label) return v.id;
    return -1;
}

int Graph::triangle_index(const Triangle& t) const {
    auto it = triangle_idx_.find(t);
    return it == triangle_idx_.end() ? -1 : it->second;
}

std::vector<TypeIFrame> Graph::type_i_frames() const {
    std::vector<TypeIFrame> frames;
    for (const auto& [key, list] : between_)
        for (int a : list)
            for (int ap : list) frames.push_back({a, ap});
    return frames;
}

std::vector<TypeIIFrame> Graph::type_ii_frames() const {
    std::vector<TypeIIFrame> frames;
    for (const auto& e1 : edges_) {
        int a = e1.source, b = e1.target;
        for (int a2 : in_[static_cast<size_t>(b)]) {
            int c = edges_[static_cast<size_t>(a2)].source;
            for (int a3 : out_[static_cast<size_t>(c)]) {
                int d = edges_[static_cast<size_t>(a3)].target;
                for (int a4 : edges_between(a, d)) frames.push_back({e1.id, a2, a3, a4});
            }
        }
    }
    return frames;
}

PFData pf_data(const Graph& g, int max_iterations, double tol) {
    int nv = g.vertex_count();
    if (nv == 0) throw std::invalid_argument("pf_data: empty graph");
    std::vector<double> v(static_cast<size_t>(nv), 1.0), next(static_cast<size_t>(nv));

    // Iterate A + A^T: symmetric, nonnegative and irreducible for connected
    // graphs, so the iteration converges to the unique positive eigenvector.
    // The catalog graphs carry a two-sided PF vector, which is exactly that
    // fixed point.
    int iter = 0;
    double delta = 0.0;
    for (; iter < max_iterations; ++iter) {
        std::fill(next.begin(), next.end(), 0.0);
        for (const auto& e : g.edges()) {
            next[static_cast<size_t>(e.source)] += v[static_cast<size_t>(e.target)];
            next[static_cast<size_t>(e.target)] += v[static_cast<size_t>(e.source)];
        }
        double norm = 0.0;
        for (double x : next) norm = std::max(norm, std::fabs(x));
        if (norm == 0.0) throw std::runtime_error("pf_data: graph has no edges");
        delta = 0.0;
        for (int i = 0; i < nv; ++i) {
            next[static_cast<size_t>(i)] /= norm;
            delta = std::max(delta, std::fabs(next[static_cast<size_t>(i)] - v[static_cast<size_t>(i)]));
        }
        v.swap(next);
        if (delta < tol) break;
    }
    if (delta >= tol) throw std::runtime_error("pf_data: power iteration did not converge");

    // Rayleigh quotient on A itself.
    std::vector<double> av(static_cast<size_t>(nv), 0.0);
    for (const auto& e : g.edges())
        av[static_cast<size_t>(e.source)] += v[static_cast<size_t>(e.target)];
    double num = 0.0, den = 0.0;
    for (int i = 0; i < nv; ++i) {
        num += av[static_cast<size_t>(i)] * v[static_cast<size_t>(i)];
        den += v[static_cast<size_t>(i)] * v[static_cast<size_t>(i)];
    }

    PFData out;
    out.eigenvalue = num / den;
    out.iterations = iter + 1;
    double base = v[static_cast<size_t>(g.distinguished())];
    out.weights.resize(static_cast<size_t>(nv));
    for (int i = 0; i < nv; ++i) out.weights[static_cast<size_t>(i)] = v[static_cast<size_t>(i)] / base;
    return out;
}

} // namespace cellforge
