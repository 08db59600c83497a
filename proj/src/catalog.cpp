#include "cellforge/catalog.hpp"
#include "cellforge/qnum.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cellforge {

namespace {

std::string pair_label(int a, int b) {
    std::ostringstream os;
    os << "(" << a << "," << b << ")";
    return os.str();
}

std::string sub_label(const char* base, int l) {
    std::ostringstream os;
    os << base << "_" << l;
    return os.str();
}

GraphPtr build_a(int n) {
    if (n < 4) throw std::invalid_argument("A(n) requires n >= 4");
    auto ctx = QContext::root_of_unity(n);
    auto g = std::make_shared<Graph>("A(" + std::to_string(n) + ")", n);

    // Vertices (l1,l2), l1+l2 <= n-3, level by level with l1 descending.
    std::map<std::pair<int, int>, int> id;
    for (int s = 0; s <= n - 3; ++s)
        for (int l1 = s; l1 >= 0; --l1) {
            int v = g->add_vertex(pair_label(l1, s - l1));
            id[{l1, s - l1}] = v;
            g->set_pf_weight(v, qprod(ctx, {l1 + 1, s - l1 + 1, s + 2}) / qint(ctx, 2));
        }
    auto has = [&](int a, int b) { return id.count({a, b}) != 0; };
    for (const auto& [lv, v] : id) {
        auto [l1, l2] = lv;
        if (has(l1 + 1, l2)) g->add_edge(v, id[{l1 + 1, l2}]);
        if (l1 >= 1 && has(l1 - 1, l2 + 1)) g->add_edge(v, id[{l1 - 1, l2 + 1}]);
        if (l2 >= 1) g->add_edge(v, id[{l1, l2 - 1}]);
    }
    g->set_distinguished(id[{0, 0}]);
    g->freeze();
    return g;
}

GraphPtr build_astar(int n) {
    if (n < 5) throw std::invalid_argument("A(n)* requires n >= 5");
    auto ctx = QContext::root_of_unity(n);
    bool odd = n % 2 != 0;
    int m = odd ? (n - 1) / 2 : n / 2 - 1; // vertex count
    auto g = std::make_shared<Graph>("A(" + std::to_string(n) + ")*", n);
    for (int i = 1; i <= m; ++i) {
        int v = g->add_vertex(std::to_string(i));
        g->set_pf_weight(v, odd ? qint(ctx, 2 * i - 1) : qint(ctx, 2 * i) / qint(ctx, 2));
    }
    for (int i = 1; i < m; ++i) {
        g->add_edge(i - 1, i);
        g->add_edge(i, i - 1);
    }
    for (int i = odd ? 2 : 1; i <= m; ++i) g->add_edge(i - 1, i - 1);
    g->set_distinguished(0);
    g->freeze();
    return g;
}

GraphPtr build_dstar(int n) {
    if (n < 6) throw std::invalid_argument("D(n)* requires n >= 6");
    auto astar = build_astar(n);
    int m = astar->vertex_count();
    auto g = std::make_shared<Graph>("D(" + std::to_string(n) + ")*", n);
    // Family f in {i, j, k} at id f*m + (l-1).
    const char* fam[3] = {"i", "j", "k"};
    for (int f = 0; f < 3; ++f)
        for (int l = 1; l <= m; ++l) {
            int v = g->add_vertex(sub_label(fam[f], l));
            g->set_pf_weight(v, astar->pf_weight(l - 1));
        }
    // Each A* edge a->b unfolds to i_a->j_b, j_a->k_b, k_a->i_b.
    for (const auto& e : astar->edges())
        for (int f = 0; f < 3; ++f) g->add_edge(f * m + e.source, ((f + 1) % 3) * m + e.target);
    g->set_distinguished(0);
    g->freeze();
    return g;
}

GraphPtr build_e8() {
    auto ctx = QContext::root_of_unity(8);
    double q3 = qint(ctx, 3);
    auto g = std::make_shared<Graph>("E(8)", 8);
    for (int l = 1; l <= 6; ++l) g->set_pf_weight(g->add_vertex(sub_label("i", l)), 1.0);
    for (int l = 1; l <= 6; ++l) g->set_pf_weight(g->add_vertex(sub_label("j", l)), q3);
    auto i = [](int l) { return (l + 5) % 6; };     // i_l, 1-based cyclic
    auto j = [](int l) { return 6 + (l + 5) % 6; }; // j_l
    for (int l = 1; l <= 6; ++l) {
        g->add_edge(i(l), j(l));
        g->add_edge(j(l), i(l + 1 > 6 ? l - 5 : l + 1));
        g->add_edge(j(l), j(l == 1 ? 6 : l - 1));
        g->add_edge(j(l), j(l + 2 > 6 ? l - 4 : l + 2));
    }
    g->set_distinguished(0);
    g->freeze();
    return g;
}

GraphPtr build_e8star() {
    auto ctx = QContext::root_of_unity(8);
    double q3 = qint(ctx, 3);
    auto g = std::make_shared<Graph>("E(8)*", 8);
    int v1 = g->add_vertex("1"), v2 = g->add_vertex("2"), v3 = g->add_vertex("3"),
        v4 = g->add_vertex("4");
    g->set_pf_weight(v1, 1.0);
    g->set_pf_weight(v2, q3);
    g->set_pf_weight(v3, q3);
    g->set_pf_weight(v4, 1.0);
    g->add_edge(v1, v2);
    g->add_edge(v2, v3);
    g->add_edge(v3, v1);
    g->add_edge(v2, v4);
    g->add_edge(v4, v3);
    g->add_edge(v3, v2);
    g->add_edge(v2, v2);
    g->add_edge(v3, v3);
    g->set_distinguished(v1);
    g->freeze();
    return g;
}

GraphPtr build_e2_12() {
    auto ctx = QContext::root_of_unity(12);
    double q2 = qint(ctx, 2), q3 = qint(ctx, 3), q4 = qint(ctx, 4);
    auto g = std::make_shared<Graph>("E2(12)", 12);
    int vi = g->add_vertex("i"), vj = g->add_vertex("j"), vk = g->add_vertex("k");
    int p[3], q[3], r[3];
    for (int l = 0; l < 3; ++l) p[l] = g->add_vertex(sub_label("p", l + 1));
    for (int l = 0; l < 3; ++l) q[l] = g->add_vertex(sub_label("q", l + 1));
    for (int l = 0; l < 3; ++l) r[l] = g->add_vertex(sub_label("r", l + 1));
    g->set_pf_weight(vi, 1.0);
    g->set_pf_weight(vj, q3);
    g->set_pf_weight(vk, q3);
    for (int l = 0; l < 3; ++l) {
        g->set_pf_weight(p[l], q2 * q2 * q2 / q4);
        g->set_pf_weight(q[l], q2 * q3 / q4);
        g->set_pf_weight(r[l], q2 * q3 / q4);
    }
    g->add_edge(vi, vj);
    g->add_edge(vj, vk);
    g->add_edge(vk, vi);
    auto cyc = [](int l, int d) { return ((l + d) % 3 + 3) % 3; };
    for (int l = 0; l < 3; ++l) {
        g->add_edge(p[l], vj);
        g->add_edge(p[l], q[l]);
        g->add_edge(p[l], q[cyc(l, -1)]);
        g->add_edge(q[l], vk);
        g->add_edge(q[l], r[cyc(l, 1)]);
        g->add_edge(vj, r[l]);
        g->add_edge(r[l], p[l]);
        g->add_edge(r[l], p[cyc(l, -1)]);
        g->add_edge(vk, p[l]);
    }
    g->set_distinguished(vi);
    g->freeze();
    return g;
}

GraphPtr build_e1_12() {
    auto ctx = QContext::root_of_unity(12);
    double q2 = qint(ctx, 2), q3 = qint(ctx, 3), q4 = qint(ctx, 4);
    auto g = std::make_shared<Graph>("E1(12)", 12);
    int vi[3], vj[3], vk[3];
    for (int l = 0; l < 3; ++l) vi[l] = g->add_vertex(sub_label("i", l + 1));
    for (int l = 0; l < 3; ++l) vj[l] = g->add_vertex(sub_label("j", l + 1));
    for (int l = 0; l < 3; ++l) vk[l] = g->add_vertex(sub_label("k", l + 1));
    int vp = g->add_vertex("p"), vq = g->add_vertex("q"), vr = g->add_vertex("r");
    for (int l = 0; l < 3; ++l) {
        g->set_pf_weight(vi[l], 1.0);
        g->set_pf_weight(vj[l], q3);
        g->set_pf_weight(vk[l], q3);
    }
    g->set_pf_weight(vp, q2 * q4);
    g->set_pf_weight(vq, q3 * q4 / q2);
    g->set_pf_weight(vr, q3 * q4 / q2);
    for (int l = 0; l < 3; ++l) {
        g->add_edge(vi[l], vj[l]);
        g->add_edge(vj[l], vk[l]);
        g->add_edge(vk[l], vi[l]);
        g->add_edge(vp, vj[l]);
        g->add_edge(vk[l], vp);
        g->add_edge(vj[l], vr);
        g->add_edge(vq, vk[l]);
    }
    g->add_edge(vr, vp, "a");
    g->add_edge(vr, vp, "a'");
    g->add_edge(vp, vq, "b");
    g->add_edge(vp, vq, "b'");
    g->add_edge(vq, vr);
    g->set_distinguished(vi[0]);
    g->freeze();
    return g;
}

GraphPtr build_e5_12() {
    auto ctx = QContext::root_of_unity(12);
    auto q = [&](int m) { return qint(ctx, m); };
    auto g = std::make_shared<Graph>("E5(12)", 12);
    for (int v = 1; v <= 17; ++v) g->add_vertex(std::to_string(v));
    auto id = [](int v) { return v - 1; };
    const double phi[18] = {0.0,
                            q(3) * q(6) / q(2),
                            q(3) * q(4) / q(2),
                            q(3) * q(4) / q(2),
                            q(3),
                            q(3),
                            q(2) * q(2),
                            q(2) * q(4),
                            q(3) * q(4) / q(2),
                            q(3),
                            1.0,
                            q(4) / q(2),
                            q(2) * q(2),
                            q(2) * q(4),
                            q(3) * q(4) / q(2),
                            q(3),
                            1.0,
                            q(4) / q(2)};
    for (int v = 1; v <= 17; ++v) g->set_pf_weight(id(v), phi[v]);
    const int edges[][2] = {{1, 6},   {1, 7},   {1, 8},  {2, 6},   {2, 7},  {2, 9},  {3, 7},
                            {3, 8},   {3, 11},  {4, 7},  {4, 10},  {5, 8},  {5, 9},  {6, 12},
                            {6, 13},  {7, 12},  {7, 13}, {7, 14},  {7, 15}, {8, 13}, {8, 14},
                            {8, 17},  {9, 13},  {9, 16}, {10, 15}, {11, 14},{12, 1}, {12, 2},
                            {13, 1},  {13, 2},  {13, 3}, {13, 5},  {14, 1}, {14, 3}, {14, 4},
                            {15, 2},  {15, 4},  {16, 5}, {17, 3}};
    for (const auto& e : edges) g->add_edge(id(e[0]), id(e[1]));
    g->set_distinguished(id(10));
    g->freeze();
    return g;
}

GraphPtr build_e24() {
    auto ctx = QContext::root_of_unity(24);
    auto q = [&](int m) { return qint(ctx, m); };
    auto g = std::make_shared<Graph>("E(24)", 24);
    for (int v = 1; v <= 24; ++v) g->add_vertex(std::to_string(v));
    auto id = [](int v) { return v - 1; };
    auto set2 = [&](int a, int b, double w) {
        g->set_pf_weight(id(a), w);
        g->set_pf_weight(id(b), w);
    };
    set2(1, 8, 1.0);
    set2(2, 7, q(2) * q(4));
    set2(3, 6, q(4) * q(5) / q(2));
    set2(4, 5, q(4) * q(7) / q(2));
    set2(9, 16, q(3));
    set2(17, 24, q(3));
    set2(10, 15, q(3) * q(4) / q(2));
    set2(18, 23, q(3) * q(4) / q(2));
    set2(11, 14, q(3) * q(5));
    set2(19, 22, q(3) * q(5));
    set2(12, 13, q(9));
    set2(20, 21, q(9));
    const int edges[][2] = {
        {1, 9},   {2, 9},   {2, 10},  {2, 11},  {3, 10},  {3, 12},  {3, 14},  {4, 11},  {4, 12},
        {4, 14},  {5, 11},  {5, 13},  {5, 14},  {6, 11},  {6, 13},  {6, 15},  {7, 14},  {7, 15},
        {7, 16},  {8, 16},  {9, 17},  {9, 18},  {10, 17}, {10, 19}, {11, 18}, {11, 19}, {11, 20},
        {11, 22}, {12, 19}, {12, 21}, {13, 20}, {13, 22}, {14, 19}, {14, 21}, {14, 22}, {14, 23},
        {15, 22}, {15, 24}, {16, 23}, {16, 24}, {17, 1},  {17, 2},  {18, 2},  {18, 6},  {19, 2},
        {19, 3},  {19, 4},  {19, 5},  {20, 5},  {20, 6},  {21, 3},  {21, 4},  {22, 4},  {22, 5},
        {22, 6},  {22, 7},  {23, 3},  {23, 7},  {24, 7},  {24, 8}};
    for (const auto& e : edges) g->add_edge(id(e[0]), id(e[1]));
    g->set_distinguished(id(1));
    g->freeze();
    return g;
}

} // namespace

std::string GraphId::display() const {
    switch (family) {
        case Family::A: return "A:" + std::to_string(n);
        case Family::D: return "D:" + std::to_string(n);
        case Family::Astar: return "Astar:" + std::to_string(n);
        case Family::Dstar: return "Dstar:" + std::to_string(n);
        case Family::E8: return "E8";
        case Family::E8star: return "E8star";
        case Family::E1_12: return "E1:12";
        case Family::E2_12: return "E2:12";
        case Family::E5_12: return "E5:12";
        case Family::E24: return "E24";
        case Family::E4_12: return "E4:12";
    }
    return "?";
}

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::D: return "D";
        case Family::Astar: return "Astar";
        case Family::Dstar: return "Dstar";
        case Family::E8: return "E8";
        case Family::E8star: return "E8star";
        case Family::E1_12: return "E1";
        case Family::E2_12: return "E2";
        case Family::E5_12: return "E5";
        case Family::E24: return "E24";
        case Family::E4_12: return "E4";
    }
    return "?";
}

GraphId parse_selector(const std::string& s) {
    std::string head = s, tail;
    auto colon = s.find(':');
    if (colon != std::string::npos) {
        head = s.substr(0, colon);
        tail = s.substr(colon + 1);
    }
    std::string norm;
    for (char c : head) norm.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    // "*" as a spelling of "star"
    auto star = norm.find('*');
    if (star != std::string::npos) norm = norm.substr(0, star) + "star";

    int n = 0;
    if (!tail.empty()) {
        size_t pos = 0;
        n = std::stoi(tail, &pos);
        if (pos != tail.size()) throw std::invalid_argument("bad graph selector: " + s);
    }

    if (norm == "a") return {Family::A, n};
    if (norm == "d") return {Family::D, n};
    if (norm == "astar") return {Family::Astar, n};
    if (norm == "dstar") return {Family::Dstar, n};
    if (norm == "e8" && (n == 0 || n == 8)) return {Family::E8, 8};
    if (norm == "e8star") return {Family::E8star, 8};
    if (norm == "e1" && (n == 0 || n == 12)) return {Family::E1_12, 12};
    if (norm == "e2" && (n == 0 || n == 12)) return {Family::E2_12, 12};
    if (norm == "e4" && (n == 0 || n == 12)) return {Family::E4_12, 12};
    if (norm == "e5" && (n == 0 || n == 12)) return {Family::E5_12, 12};
    if (norm == "e24" && (n == 0 || n == 24)) return {Family::E24, 24};
    throw std::invalid_argument("bad graph selector: " + s);
}

std::vector<int> a_graph_rotation(const Graph& a) {
    int n = a.coxeter_n();
    std::vector<int> rho(static_cast<size_t>(a.vertex_count()), -1);
    for (const auto& v : a.vertices()) {
        int l1 = 0, l2 = 0;
        if (std::sscanf(v.label.c_str(), "(%d,%d)", &l1, &l2) != 2)
            throw std::logic_error("a_graph_rotation: unexpected label " + v.label);
        int im = a.find_vertex(pair_label(n - 3 - l1 - l2, l1));
        rho[static_cast<size_t>(v.id)] = im;
    }
    return rho;
}

std::vector<int> e2_graph_rotation(const Graph& e2) {
    std::vector<int> rho(static_cast<size_t>(e2.vertex_count()), -1);
    auto at = [&](const std::string& l) { return e2.find_vertex(l); };
    rho[static_cast<size_t>(at("i"))] = at("i");
    rho[static_cast<size_t>(at("j"))] = at("j");
    rho[static_cast<size_t>(at("k"))] = at("k");
    const char* fams[3] = {"p", "q", "r"};
    for (const char* f : fams)
        for (int l = 1; l <= 3; ++l)
            rho[static_cast<size_t>(at(sub_label(f, l)))] = at(sub_label(f, l == 3 ? 1 : l + 1));
    return rho;
}

OrbifoldResult z3_orbifold(GraphPtr base, const std::vector<int>& rotation,
                           const std::string& quotient_name, const OrbifoldTagNamer& namer) {
    const Graph& b = *base;
    int nv = b.vertex_count();
    if (static_cast<int>(rotation.size()) != nv)
        throw std::invalid_argument("z3_orbifold: rotation size mismatch");

    // Permutation of order 3, nontrivial.
    bool identity = true;
    for (int v = 0; v < nv; ++v) {
        int r = rotation[static_cast<size_t>(v)];
        if (r < 0 || r >= nv) throw std::invalid_argument("z3_orbifold: rotation out of range");
        if (r != v) identity = false;
        int r3 = rotation[static_cast<size_t>(rotation[static_cast<size_t>(r)])];
        if (r3 != v) throw std::invalid_argument("z3_orbifold: rotation is not of order 3");
    }
    if (identity) throw std::invalid_argument("z3_orbifold: rotation is the identity");

    // Graph automorphism; multigraph bases are not handled.
    for (const auto& e : b.edges()) {
        if (b.edges_between(e.source, e.target).size() != 1)
            throw std::invalid_argument("z3_orbifold: base graph has parallel edges");
        if (b.edges_between(rotation[static_cast<size_t>(e.source)],
                            rotation[static_cast<size_t>(e.target)])
                .size() != 1)
            throw std::invalid_argument("z3_orbifold: rotation is not an automorphism");
    }

    OrbifoldResult res;
    res.base = base;
    res.rho = rotation;
    res.vertex_image.assign(static_cast<size_t>(nv), -1);

    auto g = std::make_shared<Graph>(
        quotient_name.empty() ? b.name() + "/Z3" : quotient_name, b.coxeter_n());

    std::vector<std::array<int, 3>> copy_of(static_cast<size_t>(nv), {-1, -1, -1});
    for (int v = 0; v < nv; ++v) {
        int rv = rotation[static_cast<size_t>(v)];
        if (rv == v) {
            res.fixed_vertices.push_back(v);
            for (int c = 0; c < 3; ++c) {
                int q = g->add_vertex(b.vertex(v).label + "_" + std::to_string(c + 1));
                g->set_pf_weight(q, b.pf_weight(v) / 3.0);
                copy_of[static_cast<size_t>(v)][static_cast<size_t>(c)] = q;
            }
            res.copies.push_back(copy_of[static_cast<size_t>(v)]);
        } else if (v < rv && v < rotation[static_cast<size_t>(rv)]) {
            int q = g->add_vertex(b.vertex(v).label);
            g->set_pf_weight(q, b.pf_weight(v));
            res.vertex_image[static_cast<size_t>(v)] = q;
            res.vertex_image[static_cast<size_t>(rv)] = q;
            res.vertex_image[static_cast<size_t>(rotation[static_cast<size_t>(rv)])] = q;
        }
    }
    // Second pass assigns the remaining orbit members (reps were handled
    // when v was the minimum of its orbit).
    for (int v = 0; v < nv; ++v)
        if (rotation[static_cast<size_t>(v)] != v && res.vertex_image[static_cast<size_t>(v)] == -1)
            throw std::logic_error("z3_orbifold: orbit bookkeeping failed");

    auto edge_image_vertex = [&](int bv, int copy) {
        return rotation[static_cast<size_t>(bv)] == bv ? copy_of[static_cast<size_t>(bv)][static_cast<size_t>(copy)]
                                                       : res.vertex_image[static_cast<size_t>(bv)];
    };

    auto rot_edge = [&](int eid) {
        const auto& e = b.edge(eid);
        return b.edges_between(rotation[static_cast<size_t>(e.source)],
                               rotation[static_cast<size_t>(e.target)])[0];
    };

    // Planned quotient edges: (source, target, lifts). Grouped afterwards to
    // assign tags within parallel bunches.
    struct Planned {
        int s, t;
        std::vector<int> lifts;
    };
    std::vector<Planned> planned;
    std::vector<char> done(static_cast<size_t>(b.edge_count()), 0);
    for (const auto& e : b.edges()) {
        if (done[static_cast<size_t>(e.id)]) continue;
        int e2 = rot_edge(e.id), e3 = rot_edge(e2);
        bool s_fixed = rotation[static_cast<size_t>(e.source)] == e.source;
        bool t_fixed = rotation[static_cast<size_t>(e.target)] == e.target;
        if (s_fixed && t_fixed) {
            // Fixed edge: one copy along each diagonal pair.
            done[static_cast<size_t>(e.id)] = 1;
            for (int c = 0; c < 3; ++c)
                planned.push_back({edge_image_vertex(e.source, c), edge_image_vertex(e.target, c), {e.id}});
        } else if (s_fixed || t_fixed) {
            std::vector<int> orbit = {e.id, e2, e3};
            std::sort(orbit.begin(), orbit.end());
            for (int id : orbit) done[static_cast<size_t>(id)] = 1;
            // Fan the orbit out over the copies, ordered by the moving
            // endpoint's base id.
            std::sort(orbit.begin(), orbit.end(), [&](int x, int y) {
                const auto& ex = b.edge(x);
                const auto& ey = b.edge(y);
                return s_fixed ? ex.target < ey.target : ex.source < ey.source;
            });
            for (int c = 0; c < 3; ++c) {
                const auto& le = b.edge(orbit[static_cast<size_t>(c)]);
                planned.push_back({edge_image_vertex(le.source, c), edge_image_vertex(le.target, c),
                                   {orbit[static_cast<size_t>(c)]}});
            }
        } else {
            std::vector<int> orbit = {e.id, e2, e3};
            std::sort(orbit.begin(), orbit.end());
            for (int id : orbit) done[static_cast<size_t>(id)] = 1;
            const auto& rep = b.edge(orbit[0]);
            planned.push_back({edge_image_vertex(rep.source, 0), edge_image_vertex(rep.target, 0), orbit});
        }
    }

    std::sort(planned.begin(), planned.end(), [](const Planned& x, const Planned& y) {
        if (x.s != y.s) return x.s < y.s;
        if (x.t != y.t) return x.t < y.t;
        return x.lifts < y.lifts;
    });
    std::map<std::pair<int, int>, int> bunch_size;
    for (const auto& p : planned) bunch_size[{p.s, p.t}]++;
    std::map<std::pair<int, int>, int> position;
    for (const auto& p : planned) {
        int size = bunch_size[{p.s, p.t}];
        int pos = position[{p.s, p.t}]++;
        std::string tag;
        if (size > 1) tag = namer ? namer(size, pos) : "o" + std::to_string(pos + 1);
        int qe = g->add_edge(p.s, p.t, tag);
        if (qe != static_cast<int>(res.edge_lifts.size()))
            throw std::logic_error("z3_orbifold: edge id bookkeeping failed");
        res.edge_lifts.push_back(p.lifts);
    }

    int bd = b.distinguished();
    g->set_distinguished(rotation[static_cast<size_t>(bd)] == bd
                             ? copy_of[static_cast<size_t>(bd)][0]
                             : res.vertex_image[static_cast<size_t>(bd)]);
    g->freeze();
    res.quotient = g;
    return res;
}

OrbifoldResult d_graph_orbifold(int n) {
    if (n < 5) throw std::invalid_argument("D(n) requires n >= 5");
    auto a = build_a(n);
    auto rho = a_graph_rotation(*a);
    std::string name = "D(" + std::to_string(n) + ")";
    if (n % 3 != 0) return z3_orbifold(a, rho, name);

    // Triple-point case: the quotient has one double edge, tagged gamma /
    // gamma'. gamma is the class whose orbit contains the A-edge
    // (k,k-1) -> (k-1,k).
    int k = n / 3 - 1;
    int src = a->find_vertex(pair_label(k, k - 1));
    int tgt = a->find_vertex(pair_label(k - 1, k));
    int gamma_lift = a->edges_between(src, tgt)[0];

    auto res = z3_orbifold(a, rho, name);
    auto g = std::make_shared<Graph>(name, n);
    const Graph& q = *res.quotient;
    for (const auto& v : q.vertices()) {
        g->add_vertex(v.label);
        g->set_pf_weight(v.id, q.pf_weight(v.id));
    }
    for (const auto& e : q.edges()) {
        std::string tag = e.tag;
        if (!tag.empty()) {
            const auto& lifts = res.edge_lifts[static_cast<size_t>(e.id)];
            bool is_gamma = std::find(lifts.begin(), lifts.end(), gamma_lift) != lifts.end();
            tag = is_gamma ? "g" : "g'";
        }
        g->add_edge(e.source, e.target, tag);
    }
    g->set_distinguished(q.distinguished());
    g->freeze();
    res.quotient = g;
    return res;
}

GraphPtr build_graph(Family family, int n) {
    switch (family) {
        case Family::A: return build_a(n);
        case Family::D: return d_graph_orbifold(n).quotient;
        case Family::Astar: return build_astar(n);
        case Family::Dstar: return build_dstar(n);
        case Family::E8: return build_e8();
        case Family::E8star: return build_e8star();
        case Family::E1_12: return build_e1_12();
        case Family::E2_12: return build_e2_12();
        case Family::E5_12: return build_e5_12();
        case Family::E24: return build_e24();
        case Family::E4_12:
            throw UnsupportedGraphError("E4(12) unsupported: not determined in source");
    }
    throw std::invalid_argument("build_graph: unknown family");
}

std::vector<GraphId> catalog(int min_n, int max_n) {
    std::vector<GraphId> out;
    for (int n = std::max(4, min_n); n <= max_n; ++n) out.push_back({Family::A, n});
    for (int n = std::max(5, min_n); n <= max_n; ++n) out.push_back({Family::D, n});
    for (int n = std::max(5, min_n); n <= max_n; ++n) out.push_back({Family::Astar, n});
    for (int n = std::max(6, min_n); n <= max_n; ++n) out.push_back({Family::Dstar, n});
    out.push_back({Family::E8, 8});
    out.push_back({Family::E8star, 8});
    out.push_back({Family::E1_12, 12});
    out.push_back({Family::E2_12, 12});
    out.push_back({Family::E5_12, 12});
    out.push_back({Family::E24, 24});
    return out;
}

} // namespace cellforge
