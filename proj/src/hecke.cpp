#include "cellforge/hecke.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cellforge {

namespace {

using cd = std::complex<double>;

std::vector<std::pair<int, int>> paths_between(const Graph& g, int x, int y) {
    std::vector<std::pair<int, int>> out;
    for (int e1 : g.out_edges(x)) {
        int mid = g.edge(e1).target;
        for (int e2 : g.edges_between(mid, y)) out.push_back({e1, e2});
    }
    return out;
}

} // namespace

int PathSpace::index_of(int e1, int e2) const {
    for (size_t i = 0; i < paths.size(); ++i)
        if (paths[i].first == e1 && paths[i].second == e2) return static_cast<int>(i);
    return -1;
}

std::string PathSpace::row_label(const Graph& g, int path_index) const {
    const auto& [e1, e2] = paths[static_cast<size_t>(path_index)];
    std::vector<std::string> tags;
    if (!g.edge(e1).tag.empty()) tags.push_back(g.edge(e1).tag);
    if (!g.edge(e2).tag.empty()) tags.push_back(g.edge(e2).tag);
    std::sort(tags.begin(), tags.end());
    std::string label = g.vertex(g.edge(e1).target).label;
    if (!tags.empty()) {
        label += "|";
        for (size_t i = 0; i < tags.size(); ++i) {
            if (i) label += ",";
            label += tags[i];
        }
    }
    return label;
}

std::vector<std::pair<int, int>> path_pairs(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < g.vertex_count(); ++x) {
        std::set<int> ys;
        for (int e1 : g.out_edges(x))
            for (int e2 : g.out_edges(g.edge(e1).target)) ys.insert(g.edge(e2).target);
        for (int y : ys) out.push_back({x, y});
    }
    return out;
}

HeckeOperator hecke_operator(const CellSystem& cs, int x, int y) {
    const Graph& g = *cs.graph;
    HeckeOperator op;
    op.space.x = x;
    op.space.y = y;
    op.space.paths = paths_between(g, x, y);
    int n = static_cast<int>(op.space.paths.size());
    if (n == 0) throw std::invalid_argument("hecke_operator: no length-2 path");
    op.m = Eigen::MatrixXcd::Zero(n, n);
    double inv_phi = 1.0 / (g.pf_weight(x) * g.pf_weight(y));
    for (int lam : g.edges_between(y, x))
        for (int row = 0; row < n; ++row)
            for (int col = 0; col < n; ++col) {
                const auto& pr = op.space.paths[static_cast<size_t>(row)];
                const auto& pc = op.space.paths[static_cast<size_t>(col)];
                op.m(row, col) += inv_phi * cs.value(lam, pc.first, pc.second) *
                                  std::conj(cs.value(lam, pr.first, pr.second));
            }
    return op;
}

HeckeReport check_hecke(const CellSystem& cs) {
    const Graph& g = *cs.graph;
    double two = qint(graph_context(g), 2);
    HeckeReport rep;
    for (const auto& [x, y] : path_pairs(g)) {
        HeckeOperator op = hecke_operator(cs, x, y);
        rep.self_adjoint =
            std::max(rep.self_adjoint, (op.m - op.m.adjoint()).cwiseAbs().maxCoeff());
        rep.quadratic =
            std::max(rep.quadratic, (op.m * op.m - two * op.m).cwiseAbs().maxCoeff());
    }
    return rep;
}

int Connection::block_of(int vx, int vy) const {
    auto pairs = path_pairs(*graph);
    for (size_t i = 0; i < pairs.size(); ++i)
        if (pairs[i].first == vx && pairs[i].second == vy) return static_cast<int>(i);
    return -1;
}

Connection connection(const CellSystem& cs) {
    const Graph& g = *cs.graph;
    Connection conn;
    conn.graph = cs.graph;
    double third = M_PI / (3.0 * g.coxeter_n());
    cd q23 = std::polar(1.0, 2.0 * third);  // q^{2/3}, principal branch
    cd qm13 = std::polar(1.0, -third);      // q^{-1/3}
    for (const auto& [x, y] : path_pairs(g)) {
        HeckeOperator op = hecke_operator(cs, x, y);
        Eigen::MatrixXcd xm =
            q23 * Eigen::MatrixXcd::Identity(op.m.rows(), op.m.cols()) - qm13 * op.m;
        conn.blocks.push_back(std::move(op));
        conn.x.push_back(std::move(xm));
    }
    return conn;
}

double check_unitarity(const Connection& conn) {
    double worst = 0.0;
    for (const auto& xm : conn.x) {
        Eigen::MatrixXcd defect =
            xm * xm.adjoint() - Eigen::MatrixXcd::Identity(xm.rows(), xm.cols());
        worst = std::max(worst, defect.cwiseAbs().maxCoeff());
    }
    return worst;
}

double check_yang_baxter(const Connection& conn) {
    const Graph& g = *conn.graph;
    // Index the blocks for direct lookup.
    std::map<std::pair<int, int>, int> block_index;
    {
        auto pairs = path_pairs(g);
        for (size_t i = 0; i < pairs.size(); ++i) block_index[pairs[i]] = static_cast<int>(i);
    }
    auto entry = [&](int sx, int sy, int up1, int up2, int lo1, int lo2) -> cd {
        int b = block_index.at({sx, sy});
        // Rows of the stored matrices are the upper (conjugated-W) paths.
        int r = conn.blocks[static_cast<size_t>(b)].space.index_of(up1, up2);
        int c = conn.blocks[static_cast<size_t>(b)].space.index_of(lo1, lo2);
        return conn.x[static_cast<size_t>(b)](r, c);
    };

    double worst = 0.0;
    for (int a = 0; a < g.vertex_count(); ++a) {
        for (int r1 : g.out_edges(a)) {
            int b1 = g.edge(r1).target;
            for (int r2 : g.out_edges(b1)) {
                int c = g.edge(r2).target;
                for (int r3 : g.out_edges(a)) {
                    int b2 = g.edge(r3).target;
                    for (int r4 : g.out_edges(b2)) {
                        int d = g.edge(r4).target;
                        for (int r5 : g.out_edges(d)) {
                            int e = g.edge(r5).target;
                            for (int r6 : g.edges_between(c, e)) {
                                cd lhs = 0.0;
                                for (int s1 : g.out_edges(a)) {
                                    int m = g.edge(s1).target;
                                    const auto& s2s = g.edges_between(m, c);
                                    const auto& s3s = g.edges_between(m, d);
                                    if (s2s.empty() || s3s.empty()) continue;
                                    for (int s2 : s2s)
                                        for (int s3 : s3s)
                                            lhs += entry(a, c, s1, s2, r1, r2) *
                                                   entry(a, d, r3, r4, s1, s3) *
                                                   entry(m, e, s3, r5, s2, r6);
                                }
                                cd rhs = 0.0;
                                for (int s1 : g.out_edges(b1)) {
                                    int m = g.edge(s1).target;
                                    const auto& s2s = g.edges_between(b2, m);
                                    const auto& s3s = g.edges_between(m, e);
                                    if (s2s.empty() || s3s.empty()) continue;
                                    for (int s2 : s2s)
                                        for (int s3 : s3s)
                                            rhs += entry(a, m, r3, s2, r1, s1) *
                                                   entry(b1, e, s1, s3, r2, r6) *
                                                   entry(b2, e, r4, r5, s2, s3);
                                }
                                worst = std::max(worst, std::abs(lhs - rhs));
                            }
                        }
                    }
                }
            }
        }
    }
    return worst;
}

namespace {

// su(3) weight geometry: vectors as c1 e1 + c3 e3 with e_i . e_j = d_ij - 1/3.
struct Wt {
    double c1, c3;
};

double wt_dot(const Wt& a, const Wt& b) {
    return (2.0 / 3.0) * (a.c1 * b.c1 + a.c3 * b.c3) - (1.0 / 3.0) * (a.c1 * b.c3 + a.c3 * b.c1);
}

Wt dir_vec(int j) { // e_1, e_2 = -e_1 - e_3, e_3
    switch (j) {
        case 1: return {1.0, 0.0};
        case 2: return {-1.0, -1.0};
        case 3: return {0.0, 1.0};
    }
    throw std::invalid_argument("direction index must be 1..3");
}

double s_fun(int n, int j, int l, const Wt& v) {
    Wt d = dir_vec(j);
    Wt dl = dir_vec(l);
    d.c1 -= dl.c1;
    d.c3 -= dl.c3;
    return std::sin(M_PI / n * wt_dot(d, v));
}

Wt lambda_prime(int l1, int l2) { return {static_cast<double>(l1 + 1), -static_cast<double>(l2 + 1)}; }

Wt wt_add(Wt a, const Wt& b) {
    a.c1 += b.c1;
    a.c3 += b.c3;
    return a;
}

} // namespace

double wenzl_weight(int n, int l1, int l2, int j, int k, int l) {
    if (j < 1 || j > 3 || k < 1 || k > 3 || l < 1 || l > 3)
        throw std::invalid_argument("wenzl_weight: direction indices must be 1..3");
    // The square's corners must lie on A(n).
    auto vertex_step = [](int dir, int& a, int& b) {
        if (dir == 1) ++a;
        else if (dir == 2) { --a; ++b; }
        else --b;
    };
    auto on_lattice = [&](int a, int b) { return a >= 0 && b >= 0 && a + b <= n - 3; };
    int corners[4][2] = {{l1, l2}, {l1, l2}, {l1, l2}, {l1, l2}};
    vertex_step(j, corners[1][0], corners[1][1]);
    vertex_step(k, corners[2][0], corners[2][1]);
    vertex_step(j, corners[3][0], corners[3][1]);
    vertex_step(k, corners[3][0], corners[3][1]);
    for (const auto& cpt : corners)
        if (!on_lattice(cpt[0], cpt[1]))
            throw std::invalid_argument("wenzl_weight: square leaves the A(n) lattice");
    if (j == l) return 0.0;
    Wt lp = lambda_prime(l1, l2);
    double num = s_fun(n, j, l, wt_add(lp, dir_vec(j))) * s_fun(n, j, l, wt_add(lp, dir_vec(k)));
    return std::sqrt(num) / s_fun(n, j, l, lp);
}

double wenzl_check(const CellSystem& cs) {
    const Graph& g = *cs.graph;
    int n = g.coxeter_n();
    auto coords = [&](int v) {
        int l1 = 0, l2 = 0;
        std::sscanf(g.vertex(v).label.c_str(), "(%d,%d)", &l1, &l2);
        return std::pair<int, int>(l1, l2);
    };
    // direction of a step between adjacent vertices
    auto step_dir = [&](std::pair<int, int> from, std::pair<int, int> to) {
        int d1 = to.first - from.first, d2 = to.second - from.second;
        if (d1 == 1 && d2 == 0) return 1;
        if (d1 == -1 && d2 == 1) return 2;
        if (d1 == 0 && d2 == -1) return 3;
        throw std::logic_error("wenzl_check: not an A-graph step");
    };
    double worst = 0.0;
    for (const auto& [x, y] : path_pairs(g)) {
        HeckeOperator op = hecke_operator(cs, x, y);
        auto cx = coords(x);
        int np = static_cast<int>(op.space.paths.size());
        // Directions of each path's two steps.
        std::vector<int> first_dir(static_cast<size_t>(np));
        std::set<int> dirs;
        for (int p = 0; p < np; ++p) {
            int mid = g.edge(op.space.paths[static_cast<size_t>(p)].first).target;
            first_dir[static_cast<size_t>(p)] = step_dir(cx, coords(mid));
            dirs.insert(first_dir[static_cast<size_t>(p)]);
            dirs.insert(step_dir(coords(mid), coords(y)));
        }
        if (dirs.size() == 1) {
            // Straight-line target: the sine weight vanishes and so must U.
            worst = std::max(worst, op.m.cwiseAbs().maxCoeff());
            continue;
        }
        int a = *dirs.begin(), b = *dirs.rbegin();
        Wt lp = lambda_prime(cx.first, cx.second);
        for (int r = 0; r < np; ++r)
            for (int col = 0; col < np; ++col) {
                double num = s_fun(n, a, b, wt_add(lp, dir_vec(first_dir[static_cast<size_t>(r)]))) *
                             s_fun(n, a, b, wt_add(lp, dir_vec(first_dir[static_cast<size_t>(col)])));
                double expect = std::sqrt(num) / s_fun(n, a, b, lp);
                worst = std::max(worst, std::abs(op.m(r, col) - expect));
            }
    }
    return worst;
}

} // namespace cellforge
