#include "cellforge/cells.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cellforge {

namespace {

using cd = std::complex<double>;

constexpr double kSqrt3 = 1.7320508075688772935;

cd eps_phase(int copy) { // copy = 0,1,2 -> 1, e^{2пi/3}, e^{-2пi/3}
    if (copy == 0) return {1.0, 0.0};
    if (copy == 1) return {-0.5, 0.5 * kSqrt3};
    return {-0.5, -0.5 * kSqrt3};
}

int parse_pair(const std::string& label, int* l2 = nullptr) {
    int a = 0, b = 0;
    if (std::sscanf(label.c_str(), "(%d,%d)", &a, &b) != 2)
        throw std::logic_error("unexpected A-vertex label " + label);
    if (l2) *l2 = b;
    return a;
}

// |W| of the A(n) triangle with the given vertex labels. The index
// convention is anchored on |W_tri(0,0)|^2 = [2][3], |W_nab(0,0)|^2 = [3][4]
// and the inductive frame relations.
double a_cell_value(const QContext& ctx, const Graph& a, int v1, int v2, int v3) {
    int l2s[3];
    int l1s[3] = {parse_pair(a.vertex(v1).label, &l2s[0]), parse_pair(a.vertex(v2).label, &l2s[1]),
                  parse_pair(a.vertex(v3).label, &l2s[2])};
    int total = l1s[0] + l1s[1] + l1s[2] + l2s[0] + l2s[1] + l2s[2];
    int k = std::min({l1s[0], l1s[1], l1s[2]});
    int m = std::min({l2s[0], l2s[1], l2s[2]});
    int rem = total % 3;
    double prod;
    if (rem == 2) // triangle type (k,m),(k+1,m),(k,m+1)
        prod = qprod(ctx, {k + 1, k + 2, m + 1, m + 2, k + m + 2, k + m + 3});
    else if (rem == 1) // type (k+1,m),(k,m+1),(k+1,m+1)
        prod = qprod(ctx, {k + 1, k + 2, m + 1, m + 2, k + m + 3, k + m + 4});
    else
        throw std::logic_error("a_cell_value: vertices do not form an A-triangle");
    return std::sqrt(prod) / qint(ctx, 2);
}

CellSystem make_system(GraphPtr g, Variant v) {
    CellSystem cs;
    cs.graph = std::move(g);
    cs.variant = v;
    cs.w.assign(cs.graph->triangles().size(), cd(std::nan(""), 0.0));
    return cs;
}

void check_total(const CellSystem& cs) {
    for (size_t i = 0; i < cs.w.size(); ++i)
        if (std::isnan(cs.w[i].real()))
            throw std::logic_error("construct_cells: triangle " + std::to_string(i) +
                                   " of " + cs.graph->name() + " was not assigned");
}

CellSystem cells_a(int n, Variant variant, int precision) {
    if (variant != Variant::Default) throw std::invalid_argument("A(n) cells: variant must be default");
    auto g = build_graph(Family::A, n);
    auto ctx = QContext::root_of_unity(n, precision);
    auto cs = make_system(g, variant);
    for (size_t idx = 0; idx < g->triangles().size(); ++idx) {
        const auto& t = g->triangles()[idx];
        cs.w[idx] = a_cell_value(ctx, *g, g->edge(t.e[0]).source, g->edge(t.e[1]).source,
                                 g->edge(t.e[2]).source);
    }
    return cs;
}

CellSystem cells_d(int n, Variant variant, int precision) {
    bool triple = n % 3 == 0;
    if (variant == Variant::Conjugate && !triple)
        throw std::invalid_argument("D(n) cells: conjugate variant needs n = 3k+3");
    if (variant != Variant::Default && variant != Variant::Conjugate)
        throw std::invalid_argument("D(n) cells: variant must be default or conjugate");

    auto orb = d_graph_orbifold(n);
    const Graph& d = *orb.quotient;
    const Graph& a = *orb.base;
    auto ctx = QContext::root_of_unity(n, precision);
    auto cs = make_system(orb.quotient, variant);

    // Copies of the triple point, if any.
    std::set<int> copy_ids;
    if (triple)
        for (int c : orb.copies[0]) copy_ids.insert(c);
    int k = n / 3 - 1;

    for (size_t idx = 0; idx < d.triangles().size(); ++idx) {
        const auto& t = d.triangles()[idx];
        int verts[3] = {d.edge(t.e[0]).source, d.edge(t.e[1]).source, d.edge(t.e[2]).source};
        int copy = -1;
        for (int v : verts)
            if (copy_ids.count(v))
                copy = v - *copy_ids.begin(); // copies are consecutive ids
        if (copy >= 0) {
            // Triangle x -> (k,k)_i -> v_out -> x; the closing edge is the
            // tagged one.
            std::string tag;
            for (int e : t.e)
                if (!d.edge(e).tag.empty()) tag = d.edge(e).tag;
            if (tag.empty()) throw std::logic_error("D cells: copy triangle without tagged edge");
            cd eps = eps_phase(copy);
            double mag;
            if (tag == "g")
                mag = qint(ctx, k) *
                      std::sqrt(qprod(ctx, {k + 1, k + 1, k + 1, k + 2})) / (kSqrt3 * qint(ctx, 2));
            else {
                eps = std::conj(eps);
                mag = qint(ctx, k + 2) *
                      std::sqrt(qprod(ctx, {k, k + 1, k + 1, k + 1})) / (kSqrt3 * qint(ctx, 2));
            }
            cs.w[idx] = eps * mag;
            continue;
        }
        // Lift edge by edge; a closed lift is an A-triangle, a twisted one
        // carries the zero cell.
        const auto& l0 = orb.edge_lifts[static_cast<size_t>(t.e[0])];
        int a0 = a.edge(l0[0]).source;
        int at = a.edge(l0[0]).target;
        bool closed = true;
        int mid[2] = {-1, -1};
        for (int step = 1; step < 3 && closed; ++step) {
            const auto& lifts = orb.edge_lifts[static_cast<size_t>(t.e[step])];
            int next = -1;
            for (int le : lifts)
                if (a.edge(le).source == at) next = le;
            if (next < 0) { closed = false; break; }
            mid[step - 1] = a.edge(next).source;
            at = a.edge(next).target;
        }
        if (closed && at != a0) closed = false;
        if (!closed) {
            cs.w[idx] = 0.0;
            continue;
        }
        cs.w[idx] = a_cell_value(ctx, a, a0, mid[0], mid[1]);
    }
    if (variant == Variant::Conjugate)
        for (auto& z : cs.w) z = std::conj(z);
    check_total(cs);
    return cs;
}

// A(n)* cell for the triangle with sorted vertex indices (1-based). sign
// selects W^+ / W^- on even-n graphs; for odd n it is ignored.
double astar_cell(const QContext& ctx, int n, int i1, int i2, int i3, int sign) {
    auto q = [&](int m) { return qint(ctx, m); };
    if (n % 2 != 0) {
        if (i1 == i2 && i2 == i3) { // W_{i,i,i}
            int i = i1;
            double s = (i % 2 == 0) ? -1.0 : 1.0; // (-1)^{i+1}
            return s * q(2 * i - 1) / std::sqrt(q(i - 1) * q(i));
        }
        if (i2 == i3) { // W_{i-1,i,i}
            int i = i2;
            return std::sqrt(q(i) * q(2 * i - 3) * q(2 * i - 1) / q(i - 1));
        }
        // W_{i,i,i+1}
        int i = i1;
        return std::sqrt(q(i - 1) * q(2 * i - 1) * q(2 * i + 1) / q(i));
    }
    double pm = sign;
    if (i1 == i2 && i2 == i3) {
        int i = i1;
        double s = (i % 2 == 0) ? -1.0 : 1.0;
        // [4i] follows the sine convention, so one branch covers the whole
        // range including the midpoint where it vanishes.
        return s * std::sqrt(q(2 * i)) / (q(2) * std::sqrt(q(2 * i - 1) * q(2 * i + 1))) *
               std::sqrt(q(2) * q(2 * i) + pm * q(4 * i));
    }
    if (i1 == i2) { // W_{i,i,i+1}
        int i = i1;
        return std::sqrt(q(2 * i) * q(2 * i + 2)) / (q(2) * std::sqrt(q(2 * i + 1))) *
               std::sqrt(q(2 * i) - pm * 1.0);
    }
    // W_{i,i+1,i+1}
    int i = i1;
    return std::sqrt(q(2 * i) * q(2 * i + 2)) / (q(2) * std::sqrt(q(2 * i + 1))) *
           std::sqrt(q(2 * i + 2) + pm * 1.0);
}

int astar_sign(int n, Variant variant) {
    if (n % 2 != 0) {
        if (variant != Variant::Default)
            throw std::invalid_argument("A(odd)* cells: variant must be default");
        return 0;
    }
    if (variant == Variant::Plus) return 1;
    if (variant == Variant::Minus) return -1;
    throw std::invalid_argument("A(even)* cells: variant must be plus or minus");
}

CellSystem cells_astar(int n, Variant variant, int precision) {
    int sign = astar_sign(n, variant);
    auto g = build_graph(Family::Astar, n);
    auto ctx = QContext::root_of_unity(n, precision);
    auto cs = make_system(g, variant);
    for (size_t idx = 0; idx < g->triangles().size(); ++idx) {
        const auto& t = g->triangles()[idx];
        int i[3] = {g->edge(t.e[0]).source + 1, g->edge(t.e[1]).source + 1,
                    g->edge(t.e[2]).source + 1};
        std::sort(i, i + 3);
        cs.w[idx] = astar_cell(ctx, n, i[0], i[1], i[2], sign);
    }
    check_total(cs);
    return cs;
}

CellSystem cells_dstar(int n, Variant variant, int precision) {
    int sign = astar_sign(n, variant);
    auto g = build_graph(Family::Dstar, n);
    auto ctx = QContext::root_of_unity(n, precision);
    int m = g->vertex_count() / 3;
    auto cs = make_system(g, variant);
    for (size_t idx = 0; idx < g->triangles().size(); ++idx) {
        const auto& t = g->triangles()[idx];
        int i[3] = {g->edge(t.e[0]).source % m + 1, g->edge(t.e[1]).source % m + 1,
                    g->edge(t.e[2]).source % m + 1};
        std::sort(i, i + 3);
        cs.w[idx] = astar_cell(ctx, n, i[0], i[1], i[2], sign);
    }
    check_total(cs);
    return cs;
}

CellSystem cells_e8(Variant variant, int precision) {
    if (variant != Variant::Default) throw std::invalid_argument("E(8) cells: variant must be default");
    auto g = build_graph(Family::E8);
    auto ctx = QContext::root_of_unity(8, precision);
    auto q = [&](int m) { return qint(ctx, m); };
    auto cs = make_system(g, variant);
    for (size_t idx = 0; idx < g->triangles().size(); ++idx) {
        const auto& t = g->triangles()[idx];
        bool has_i = false;
        std::set<int> js; // 1-based j indices
        for (int e : t.e) {
            int v = g->edge(e).source;
            if (v < 6) has_i = true;
            else js.insert(v - 5);
        }
        if (has_i) {
            cs.w[idx] = std::sqrt(q(2) * q(3));
        } else if (js == std::set<int>{1, 3, 5}) {
            cs.w[idx] = q(2) * q(3) / std::sqrt(q(4));
        } else if (js == std::set<int>{2, 4, 6}) {
            cs.w[idx] = -q(2) * q(3) / std::sqrt(q(4));
        } else {
            cs.w[idx] = q(2) * std::sqrt(q(3)) / std::sqrt(q(4));
        }
    }
    check_total(cs);
    return cs;
}

CellSystem cells_e8star(Variant variant, int precision) {
    if (variant != Variant::Default)
        throw std::invalid_argument("E(8)* cells: variant must be default");
    auto g = build_graph(Family::E8star);
    auto ctx = QContext::root_of_unity(8, precision);
    auto q = [&](int m) { return qint(ctx, m); };
    auto cs = make_system(g, variant);
    for (size_t idx = 0; idx < g->triangles().size(); ++idx) {
        const auto& t = g->triangles()[idx];
        std::multiset<int> vs;
        for (int e : t.e) vs.insert(g->edge(e).source + 1);
        if (vs == std::multiset<int>{1, 2, 3} || vs == std::multiset<int>{2, 3, 4})
            cs.w[idx] = std::sqrt(q(2) * q(3));
        else if (vs == std::multiset<int>{2, 2, 3} || vs == std::multiset<int>{2, 3, 3})
            cs.w[idx] = q(3) / std::sqrt(q(2));
        else if (vs == std::multiset<int>{2, 2, 2})
            cs.w[idx] = std::sqrt(q(3) * q(3) * q(3) / q(2));
        else if (vs == std::multiset<int>{3, 3, 3})
            cs.w[idx] = -std::sqrt(q(3) * q(3) * q(3) / q(2));
        else
            throw std::logic_error("E(8)* cells: unexpected triangle");
    }
    check_total(cs);
    return cs;
}

// Vertex classification for E1(12)/E2(12): family letter and index.
struct FamIdx {
    char fam;
    int l; // 0-based, -1 when the family is unindexed
};

FamIdx fam_idx(const std::string& label) {
    if (label.size() == 1) return {label[0], -1};
    return {label[0], label[2] - '1'};
}

CellSystem cells_e2(Variant variant, int precision) {
    if (variant != Variant::Plus && variant != Variant::Minus)
        throw std::invalid_argument("E2(12) cells: variant must be plus or minus");
    double pm = variant == Variant::Plus ? 1.0 : -1.0;
    auto g = build_graph(Family::E2_12);
    auto ctx = QContext::root_of_unity(12, precision);
    auto q = [&](int m) { return qint(ctx, m); };
    double s = std::sqrt(q(2) * q(4));
    double c = std::sqrt(q(2) * q(2) * q(2)) / q(4);
    auto cs = make_system(g, variant);
    for (size_t idx = 0; idx < g->triangles().size(); ++idx) {
        const auto& t = g->triangles()[idx];
        std::map<char, int> at; // family -> index
        for (int e : t.e) {
            auto fi = fam_idx(g->vertex(g->edge(e).source).label);
            at[fi.fam] = fi.l;
        }
        if (at.count('i')) {
            cs.w[idx] = std::sqrt(q(2) * q(3));
        } else if (at.count('j') && at.count('k')) { // (p_l, j, k)
            cs.w[idx] = q(2) * std::sqrt(q(3)) / std::sqrt(q(4));
        } else if (at.count('q') && at.count('r')) {
            int l = at['p'], lq = at['q'], lr = at['r'];
            if (lq == (l + 2) % 3 && lr == l) // (p_l, q_{l-1}, r_l)
                cs.w[idx] = c * std::sqrt(q(2) * q(2) + pm * s);
            else if (lq == l && lr == (l + 1) % 3) // (p_l, q_l, r_{l+1})
                cs.w[idx] = -c * std::sqrt(q(2) * q(2) - pm * s);
            else
                throw std::logic_error("E2(12) cells: unexpected (p,q,r) triangle");
        } else if (at.count('q')) { // (p_l, q_m, k)
            int l = at['p'], lq = at['q'];
            cs.w[idx] = lq == l ? c * std::sqrt(q(2) * q(4) + pm * s)
                                : c * std::sqrt(q(2) * q(4) - pm * s);
        } else { // (p_l, j, r_m)
            int l = at['p'], lr = at['r'];
            cs.w[idx] = lr == (l + 1) % 3 ? c * std::sqrt(q(2) * q(4) + pm * s)
                                          : c * std::sqrt(q(2) * q(4) - pm * s);
        }
    }
    check_total(cs);
    return cs;
}

CellSystem cells_e1(Variant variant, int precision) {
    if (variant != Variant::Plus && variant != Variant::Minus)
        throw std::invalid_argument("E1(12) cells: variant must be plus or minus");
    double pm = variant == Variant::Plus ? 1.0 : -1.0;
    auto g = build_graph(Family::E1_12);
    auto ctx = QContext::root_of_unity(12, precision);
    auto q = [&](int m) { return qint(ctx, m); };
    double s = std::sqrt(q(2) * q(4));
    auto cs = make_system(g, variant);
    for (size_t idx = 0; idx < g->triangles().size(); ++idx) {
        const auto& t = g->triangles()[idx];
        std::map<char, int> at;
        std::set<std::string> tags;
        for (int e : t.e) {
            auto fi = fam_idx(g->vertex(g->edge(e).source).label);
            at[fi.fam] = fi.l;
            if (!g->edge(e).tag.empty()) tags.insert(g->edge(e).tag);
        }
        if (at.count('i')) {
            cs.w[idx] = std::sqrt(q(2) * q(3));
        } else if (at.count('j') && at.count('k')) { // (p, j_l, k_l)
            cs.w[idx] = std::sqrt(q(3) * q(4));
        } else if (at.count('j')) { // (p, j_l, r) via alpha / alpha'
            int l = at['j'];
            if (tags == std::set<std::string>{"a"})
                cs.w[idx] = eps_phase(l) * std::sqrt(q(2)) * std::sqrt(q(2) * q(4) + pm * s);
            else
                cs.w[idx] =
                    std::conj(eps_phase(l)) * std::sqrt(q(2)) * std::sqrt(q(2) * q(4) - pm * s);
        } else if (at.count('k')) { // (p, q, k_l) via beta / beta'
            int l = at['k'];
            if (tags == std::set<std::string>{"b"})
                cs.w[idx] = eps_phase(l) * std::sqrt(q(2)) * std::sqrt(q(2) * q(4) - pm * s);
            else
                cs.w[idx] =
                    std::conj(eps_phase(l)) * std::sqrt(q(2)) * std::sqrt(q(2) * q(4) + pm * s);
        } else { // (p, q, r) via an alpha and a beta edge
            if (tags == std::set<std::string>{"a", "b'"})
                cs.w[idx] = q(4) / std::sqrt(q(2)) * std::sqrt(q(2) * q(2) - pm * s);
            else if (tags == std::set<std::string>{"a'", "b"})
                cs.w[idx] = -q(4) / std::sqrt(q(2)) * std::sqrt(q(2) * q(2) + pm * s);
            else
                cs.w[idx] = 0.0; // (alpha,beta), (alpha',beta'): twisted lifts
        }
    }
    check_total(cs);
    return cs;
}

// Cell table keyed by sorted vertex labels; every triangle of these two
// graphs is determined by its vertex set.
CellSystem cells_from_table(Family family, int n, Variant variant, int precision,
                            const std::map<std::set<int>, double>& table) {
    if (variant != Variant::Default)
        throw std::invalid_argument("cells: variant must be default for this family");
    auto g = build_graph(family, n);
    auto cs = make_system(g, variant);
    for (size_t idx = 0; idx < g->triangles().size(); ++idx) {
        const auto& t = g->triangles()[idx];
        std::set<int> vs;
        for (int e : t.e) vs.insert(std::stoi(g->vertex(g->edge(e).source).label));
        auto it = table.find(vs);
        if (it == table.end())
            throw std::logic_error(g->name() + " cells: no table entry for a triangle");
        cs.w[idx] = it->second;
    }
    check_total(cs);
    (void)precision;
    return cs;
}

CellSystem cells_e5(Variant variant, int precision) {
    auto ctx = QContext::root_of_unity(12, precision);
    auto q = [&](int m) { return qint(ctx, m); };
    std::map<std::set<int>, double> t;
    auto put = [&](std::initializer_list<std::set<int>> keys, double v) {
        for (const auto& k : keys) t[k] = v;
    };
    put({{1, 6, 12}, {4, 10, 15}, {5, 9, 16}}, std::sqrt(q(2) * q(3)));
    put({{1, 6, 13}, {1, 7, 12}}, q(2) * std::sqrt(q(3) * q(4)));
    put({{1, 7, 13}, {3, 7, 14}, {3, 8, 13}, {3, 8, 17}, {3, 11, 14}},
        q(4) * std::sqrt(q(3)) / std::sqrt(q(2)));
    // The type I frames through vertices 15, 9, 14 and 8 pin these four at
    // [3] sqrt([4]); the raw table lumps them into the family above.
    put({{2, 7, 15}, {2, 9, 13}, {4, 7, 14}, {5, 8, 13}}, q(3) * std::sqrt(q(4)));
    // Frame (1 -> 8) forces the [2] denominator here.
    put({{1, 8, 14}}, q(4) * std::sqrt(q(3) * q(6)) / q(2));
    put({{1, 7, 14}, {1, 8, 13}}, std::sqrt(qprod(ctx, {3, 4, 6})) / std::sqrt(q(2)));
    put({{2, 6, 12}}, q(4) * std::sqrt(q(2)));
    put({{2, 6, 13}, {2, 7, 12}}, q(2) * std::sqrt(q(4)));
    put({{2, 7, 13}}, -q(4) * std::sqrt(q(2)));
    put({{3, 7, 13}}, -q(4) * std::sqrt(q(6)));
    put({{3, 8, 14}}, q(4) * std::sqrt(q(6)) / q(2));
    put({{4, 7, 15}, {5, 9, 13}}, std::sqrt(q(3) * q(4)));
    return cells_from_table(Family::E5_12, 12, variant, precision, t);
}

CellSystem cells_e24(Variant variant, int precision) {
    auto ctx = QContext::root_of_unity(24, precision);
    auto q = [&](int m) { return qint(ctx, m); };
    std::map<std::set<int>, double> t;
    auto put = [&](std::initializer_list<std::set<int>> keys, double v) {
        for (const auto& k : keys) t[k] = v;
    };
    put({{1, 9, 17}, {8, 16, 24}}, std::sqrt(q(2) * q(3)));
    put({{2, 9, 17}, {7, 16, 24}}, std::sqrt(q(3) * q(4)));
    put({{2, 9, 18}, {2, 10, 17}, {7, 15, 24}, {7, 16, 23}}, q(3) * std::sqrt(q(4)));
    put({{2, 10, 19}, {2, 11, 18}, {7, 14, 23}, {7, 15, 22}}, std::sqrt(qprod(ctx, {3, 4, 5})));
    put({{2, 11, 19}, {7, 14, 22}}, q(3) * std::sqrt(q(4) * q(5)));
    put({{3, 10, 19}, {3, 14, 23}, {6, 11, 18}, {6, 15, 22}},
        q(4) * std::sqrt(q(3) * q(5)) / std::sqrt(q(2)));
    put({{4, 11, 19}, {4, 14, 22}, {5, 11, 19}, {5, 14, 22}}, std::sqrt(qprod(ctx, {4, 5, 7})));
    put({{4, 12, 19}, {4, 14, 21}, {5, 11, 20}, {5, 13, 22}},
        q(3) * std::sqrt(q(5) * q(9)) / std::sqrt(q(2)));
    put({{3, 12, 19}, {3, 14, 21}, {6, 11, 20}, {6, 13, 22}},
        std::sqrt(qprod(ctx, {3, 5, 9})) / std::sqrt(q(2)));
    put({{3, 14, 19}, {6, 11, 22}}, q(3) * q(5) / std::sqrt(q(2)));
    put({{4, 14, 19}, {5, 11, 22}}, q(5) * std::sqrt(q(7)) / std::sqrt(q(2)));
    put({{5, 14, 19}}, std::sqrt(qprod(ctx, {5, 7, 10})));
    put({{4, 11, 22}}, -std::sqrt(qprod(ctx, {5, 7, 10})));
    put({{3, 12, 21}, {6, 13, 20}}, -q(5) * std::sqrt(q(9)) / std::sqrt(q(2)));
    put({{4, 12, 21}, {5, 13, 20}}, std::sqrt(q(7) * q(9)) / std::sqrt(q(2)));
    return cells_from_table(Family::E24, 24, variant, precision, t);
}

} // namespace

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::Default: return "default";
        case Variant::Conjugate: return "conj";
        case Variant::Plus: return "plus";
        case Variant::Minus: return "minus";
    }
    return "?";
}

Variant parse_variant(const std::string& s) {
    if (s.empty() || s == "default") return Variant::Default;
    if (s == "conj" || s == "conjugate") return Variant::Conjugate;
    if (s == "plus" || s == "+") return Variant::Plus;
    if (s == "minus" || s == "-") return Variant::Minus;
    throw std::invalid_argument("bad variant: " + s);
}

std::vector<Variant> legal_variants(Family family, int n) {
    switch (family) {
        case Family::A: return {Variant::Default};
        case Family::D:
            return n % 3 == 0 ? std::vector<Variant>{Variant::Default, Variant::Conjugate}
                              : std::vector<Variant>{Variant::Default};
        case Family::Astar:
        case Family::Dstar:
            return n % 2 == 0 ? std::vector<Variant>{Variant::Plus, Variant::Minus}
                              : std::vector<Variant>{Variant::Default};
        case Family::E1_12:
        case Family::E2_12: return {Variant::Plus, Variant::Minus};
        case Family::E8:
        case Family::E8star:
        case Family::E5_12:
        case Family::E24: return {Variant::Default};
        case Family::E4_12: return {};
    }
    return {};
}

CellSystem construct_cells(Family family, int n, Variant variant, int precision) {
    CellSystem cs = [&] {
        switch (family) {
            case Family::A: return cells_a(n, variant, precision);
            case Family::D: return cells_d(n, variant, precision);
            case Family::Astar: return cells_astar(n, variant, precision);
            case Family::Dstar: return cells_dstar(n, variant, precision);
            case Family::E8: return cells_e8(variant, precision);
            case Family::E8star: return cells_e8star(variant, precision);
            case Family::E1_12: return cells_e1(variant, precision);
            case Family::E2_12: return cells_e2(variant, precision);
            case Family::E5_12: return cells_e5(variant, precision);
            case Family::E24: return cells_e24(variant, precision);
            case Family::E4_12:
                throw UnsupportedGraphError("E4(12) unsupported: not determined in source");
        }
        throw std::invalid_argument("construct_cells: unknown family");
    }();
    cs.id = {family, cs.graph->coxeter_n()};
    return cs;
}

CellSystem construct_cells_id(const GraphId& id, Variant variant, int precision) {
    return construct_cells(id.family, id.n, variant, precision);
}

CellSystem conjugate(const CellSystem& cs) {
    CellSystem out = cs;
    for (auto& z : out.w) z = std::conj(z);
    return out;
}

double verify_type_i(const CellSystem& cs) {
    const Graph& g = *cs.graph;
    double two = qint(graph_context(g), 2);
    double worst = 0.0;
    for (const auto& f : g.type_i_frames()) {
        const auto& alpha = g.edge(f.alpha);
        int a = alpha.source, b = alpha.target;
        cd sum = 0.0;
        for (int beta : g.out_edges(b)) {
            int c = g.edge(beta).target;
            for (int gamma : g.edges_between(c, a))
                sum += cs.value(f.alpha, beta, gamma) * std::conj(cs.value(f.alpha_prime, beta, gamma));
        }
        if (f.alpha == f.alpha_prime) sum -= two * g.pf_weight(a) * g.pf_weight(b);
        worst = std::max(worst, std::abs(sum));
    }
    return worst;
}

double verify_type_ii(const CellSystem& cs) {
    const Graph& g = *cs.graph;
    double worst = 0.0;
    for (const auto& f : g.type_ii_frames()) {
        const auto& e1 = g.edge(f.a1);
        const auto& e2 = g.edge(f.a2);
        const auto& e3 = g.edge(f.a3);
        int a = e1.source, b = e1.target, c = e2.source, d = e3.target;
        cd sum = 0.0;
        for (int beta : g.out_edges(b)) {
            int x = g.edge(beta).target;
            const auto& deltas = g.edges_between(d, x);
            const auto& g1s = g.edges_between(x, a);
            const auto& g2s = g.edges_between(x, c);
            if (deltas.empty() || g1s.empty() || g2s.empty()) continue;
            double inv_phi = 1.0 / g.pf_weight(x);
            for (int delta : deltas)
                for (int g1 : g1s)
                    for (int g2 : g2s)
                        sum += inv_phi * cs.value(f.a1, beta, g1) *
                               std::conj(cs.value(f.a2, beta, g2)) * cs.value(f.a3, delta, g2) *
                               std::conj(cs.value(f.a4, delta, g1));
        }
        double rhs = 0.0;
        if (f.a1 == f.a2 && f.a3 == f.a4)
            rhs += g.pf_weight(a) * g.pf_weight(b) * g.pf_weight(d);
        if (f.a1 == f.a4 && f.a2 == f.a3)
            rhs += g.pf_weight(a) * g.pf_weight(b) * g.pf_weight(c);
        worst = std::max(worst, std::abs(sum - rhs));
    }
    return worst;
}

double frame_objective(const CellSystem& cs) {
    const Graph& g = *cs.graph;
    double two = qint(graph_context(g), 2);
    double total = 0.0;
    for (const auto& f : g.type_i_frames()) {
        const auto& alpha = g.edge(f.alpha);
        cd sum = 0.0;
        for (int beta : g.out_edges(alpha.target))
            for (int gamma : g.edges_between(g.edge(beta).target, alpha.source))
                sum += cs.value(f.alpha, beta, gamma) * std::conj(cs.value(f.alpha_prime, beta, gamma));
        if (f.alpha == f.alpha_prime) sum -= two * g.pf_weight(alpha.source) * g.pf_weight(alpha.target);
        total += std::norm(sum);
    }
    for (const auto& f : g.type_ii_frames()) {
        const auto& e1 = g.edge(f.a1);
        const auto& e2 = g.edge(f.a2);
        const auto& e3 = g.edge(f.a3);
        int a = e1.source, b = e1.target, c = e2.source, d = e3.target;
        cd sum = 0.0;
        for (int beta : g.out_edges(b)) {
            int x = g.edge(beta).target;
            double inv_phi = 1.0 / g.pf_weight(x);
            for (int delta : g.edges_between(d, x))
                for (int g1 : g.edges_between(x, a))
                    for (int g2 : g.edges_between(x, c))
                        sum += inv_phi * cs.value(f.a1, beta, g1) *
                               std::conj(cs.value(f.a2, beta, g2)) * cs.value(f.a3, delta, g2) *
                               std::conj(cs.value(f.a4, delta, g1));
        }
        if (f.a1 == f.a2 && f.a3 == f.a4) sum -= g.pf_weight(a) * g.pf_weight(b) * g.pf_weight(d);
        if (f.a1 == f.a4 && f.a2 == f.a3) sum -= g.pf_weight(a) * g.pf_weight(b) * g.pf_weight(c);
        total += std::norm(sum);
    }
    return total;
}

int triangle_by_labels(const Graph& g, const std::vector<std::string>& vertex_labels,
                       const std::vector<std::string>& tags) {
    std::multiset<std::string> want(vertex_labels.begin(), vertex_labels.end());
    std::multiset<std::string> want_tags(tags.begin(), tags.end());
    int found = -1;
    for (size_t idx = 0; idx < g.triangles().size(); ++idx) {
        const auto& t = g.triangles()[idx];
        std::multiset<std::string> have, have_tags;
        for (int e : t.e) {
            have.insert(g.vertex(g.edge(e).source).label);
            if (!g.edge(e).tag.empty()) have_tags.insert(g.edge(e).tag);
        }
        if (have != want) continue;
        if (!want_tags.empty() && have_tags != want_tags) continue;
        if (found >= 0)
            throw std::invalid_argument("triangle_by_labels: ambiguous triangle (pass tags)");
        found = static_cast<int>(idx);
    }
    if (found < 0) throw std::invalid_argument("triangle_by_labels: no such triangle");
    return found;
}

std::complex<double> cell_by_labels(const CellSystem& cs,
                                    const std::vector<std::string>& vertex_labels,
                                    const std::vector<std::string>& tags) {
    return cs.w[static_cast<size_t>(triangle_by_labels(*cs.graph, vertex_labels, tags))];
}

} // namespace cellforge
