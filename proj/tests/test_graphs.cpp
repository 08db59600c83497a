#include <doctest.h>

#include "cellforge/catalog.hpp"
#include "cellforge/qnum.hpp"

#include <algorithm>
#include <cmath>
#include <set>

using namespace cellforge;

namespace {

// Independent brute-force triangle count: all composable edge triples,
// cyclic classes deduplicated by sorted edge-id triple with rotation.
int brute_force_triangles(const Graph& g) {
    std::set<std::array<int, 3>> classes;
    for (const auto& e1 : g.edges())
        for (const auto& e2 : g.edges()) {
            if (e2.source != e1.target) continue;
            for (const auto& e3 : g.edges()) {
                if (e3.source != e2.target || e3.target != e1.source) continue;
                std::array<int, 3> c[3] = {{e1.id, e2.id, e3.id},
                                           {e2.id, e3.id, e1.id},
                                           {e3.id, e1.id, e2.id}};
                classes.insert(*std::min_element(c, c + 3));
            }
        }
    return static_cast<int>(classes.size());
}

} // namespace

TEST_CASE("A(5) basic counts") {
    auto g = build_graph(Family::A, 5);
    CHECK(g->vertex_count() == 6);
    CHECK(g->edge_count() == 9);
    // Brute force gives 4 cyclic classes on A(5): the three pointing
    // triangles plus the inverted one.
    CHECK(brute_force_triangles(*g) == 4);
    CHECK(static_cast<int>(g->triangles().size()) == 4);
}

TEST_CASE("triangle enumeration matches brute force on the catalog") {
    for (const auto& id : catalog(4, 12)) {
        auto g = build_graph(id);
        CHECK(static_cast<int>(g->triangles().size()) == brute_force_triangles(*g));
    }
}

TEST_CASE("every catalog edge lies on a triangle") {
    for (const auto& id : catalog(4, 12)) {
        auto g = build_graph(id);
        std::set<int> covered;
        for (const auto& t : g->triangles())
            for (int e : t.e) covered.insert(e);
        CHECK(static_cast<int>(covered.size()) == g->edge_count());
    }
}

TEST_CASE("empty graph has no triangles") {
    Graph g("empty", 6);
    g.add_vertex("a");
    g.freeze();
    CHECK(g.triangles().empty());
}

TEST_CASE("E(8) structure") {
    auto g = build_graph(Family::E8);
    CHECK(g->vertex_count() == 12);
    auto ctx = QContext::root_of_unity(8);
    for (int l = 1; l <= 6; ++l) {
        CHECK(g->pf_weight(g->find_vertex("i_" + std::to_string(l))) == doctest::Approx(1.0));
        CHECK(g->pf_weight(g->find_vertex("j_" + std::to_string(l))) ==
              doctest::Approx(qint(ctx, 3)));
    }
}

TEST_CASE("E(8)* has six triangles including the loop cubes") {
    auto g = build_graph(Family::E8star);
    CHECK(static_cast<int>(g->triangles().size()) == 6);
    int loops = 0;
    for (const auto& t : g->triangles())
        if (t.e[0] == t.e[1] && t.e[1] == t.e[2]) ++loops;
    CHECK(loops == 2); // (2,2,2) and (3,3,3)
}

TEST_CASE("E5(12) weights") {
    auto g = build_graph(Family::E5_12);
    CHECK(g->vertex_count() == 17);
    auto ctx = QContext::root_of_unity(12);
    CHECK(g->pf_weight(g->find_vertex("1")) ==
          doctest::Approx(qint(ctx, 3) * qint(ctx, 6) / qint(ctx, 2)));
    CHECK(g->pf_weight(g->find_vertex("6")) ==
          doctest::Approx(qint(ctx, 2) * qint(ctx, 2)));
    CHECK(g->distinguished() == g->find_vertex("10"));
}

TEST_CASE("type I frames") {
    auto a5 = build_graph(Family::A, 5);
    for (const auto& f : a5->type_i_frames()) CHECK(f.alpha == f.alpha_prime); // simple graph
    auto d9 = build_graph(Family::D, 9);
    bool mixed = false;
    for (const auto& f : d9->type_i_frames())
        if (f.alpha != f.alpha_prime) mixed = true;
    CHECK(mixed); // the double edge contributes off-diagonal frames
}

TEST_CASE("type II frame count cross-check on E(24)") {
    auto g = build_graph(Family::E24);
    // Independent enumeration: ordered pairs sharing a target times the
    // completions.
    long expected = 0;
    for (const auto& a1 : g->edges())
        for (const auto& a2 : g->edges()) {
            if (a2.target != a1.target) continue;
            for (const auto& a3 : g->edges()) {
                if (a3.source != a2.source) continue;
                expected += static_cast<long>(g->edges_between(a1.source, a3.target).size());
            }
        }
    CHECK(static_cast<long>(g->type_ii_frames().size()) == expected);
    // degenerate frames are present
    bool degenerate = false;
    for (const auto& f : g->type_ii_frames())
        if (f.a1 == f.a2 && f.a2 == f.a3 && f.a3 == f.a4) degenerate = true;
    CHECK(degenerate);
}

TEST_CASE("Perron-Frobenius data") {
    auto a6 = build_graph(Family::A, 6);
    PFData pf = pf_data(*a6);
    CHECK(pf.eigenvalue == doctest::Approx(2.0).epsilon(1e-12)); // [3] at n = 6
    // A phi = [3] phi componentwise
    for (int v = 0; v < a6->vertex_count(); ++v) {
        double av = 0.0;
        for (int e : a6->out_edges(v)) av += pf.weights[a6->edge(e).target];
        CHECK(av == doctest::Approx(pf.eigenvalue * pf.weights[v]).epsilon(1e-10));
    }

    auto e24 = build_graph(Family::E24);
    auto ctx = QContext::root_of_unity(24);
    PFData p24 = pf_data(*e24);
    CHECK(p24.weights[e24->find_vertex("4")] ==
          doctest::Approx(qint(ctx, 4) * qint(ctx, 7) / qint(ctx, 2)).epsilon(1e-10));

    for (const auto& id : catalog(4, 12)) {
        auto g = build_graph(id);
        auto c = QContext::root_of_unity(g->coxeter_n());
        PFData p = pf_data(*g);
        CHECK(std::fabs(p.eigenvalue - qint(c, 3)) <= 1e-9);
        for (int v = 0; v < g->vertex_count(); ++v)
            CHECK(std::fabs(p.weights[v] - g->pf_weight(v)) <= 1e-10);
    }
}

TEST_CASE("Z3 orbifold") {
    auto a6 = build_graph(Family::A, 6);
    auto rho = a_graph_rotation(*a6);
    auto orb = z3_orbifold(a6, rho);
    // 10 vertices, one fixed point (1,1): (10-1)/3 + 3 = 6
    CHECK(orb.quotient->vertex_count() == 6);
    CHECK(static_cast<int>(orb.fixed_vertices.size()) == 1);

    for (int n = 5; n <= 12; ++n) {
        auto a = build_graph(Family::A, n);
        auto o = z3_orbifold(a, a_graph_rotation(*a));
        int f = static_cast<int>(o.fixed_vertices.size());
        CHECK(o.quotient->vertex_count() == (a->vertex_count() - f) / 3 + 3 * f);
    }

    auto d9 = build_graph(Family::D, 9);
    auto a9 = build_graph(Family::A, 9);
    auto o9 = z3_orbifold(a9, a_graph_rotation(*a9));
    CHECK(o9.quotient->vertex_count() == d9->vertex_count());
    CHECK(o9.quotient->edge_count() == d9->edge_count());

    // a non-automorphism is rejected
    std::vector<int> bad(a6->vertex_count());
    for (size_t i = 0; i < bad.size(); ++i) bad[i] = static_cast<int>(i);
    std::swap(bad[0], bad[1]);
    CHECK_THROWS(z3_orbifold(a6, bad)); // order 2, not 3

    // E2(12) with i, j, k fixed triplicates them
    auto e2 = build_graph(Family::E2_12);
    auto oe = z3_orbifold(e2, e2_graph_rotation(*e2));
    CHECK(oe.quotient->vertex_count() == 12);
    CHECK(static_cast<int>(oe.fixed_vertices.size()) == 3);
    CHECK(oe.quotient->edge_count() == build_graph(Family::E1_12)->edge_count());
}

TEST_CASE("selector parsing and errors") {
    CHECK(parse_selector("A:6").family == Family::A);
    CHECK(parse_selector("astar:7").family == Family::Astar);
    CHECK(parse_selector("A*:7").family == Family::Astar);
    CHECK(parse_selector("D:9").n == 9);
    CHECK(parse_selector("E1:12").family == Family::E1_12);
    CHECK(parse_selector("e8star").family == Family::E8star);
    CHECK_THROWS(parse_selector("Q:4"));
    CHECK_THROWS_AS(build_graph(Family::E4_12), UnsupportedGraphError);
    CHECK_THROWS(build_graph(Family::A, 3));
    CHECK_THROWS(build_graph(Family::D, 4));
    CHECK_THROWS(build_graph(Family::Astar, 4));
    CHECK_THROWS(build_graph(Family::Dstar, 5));
}
