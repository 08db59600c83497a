#include <doctest.h>

#include "cellforge/solver.hpp"

#include <cmath>

using namespace cellforge;

TEST_CASE("A(5) is solved and matches the closed form") {
    SolveOptions so;
    so.restarts = 10;
    so.seed = 3;
    auto g = build_graph(Family::A, 5);
    SolveOutcome oc = solve_cells(g, so);
    REQUIRE(oc.solved);
    CHECK(oc.objective <= 1e-16);
    CHECK(verify_type_i(*oc.cells) <= 1e-9);
    CHECK(verify_type_ii(*oc.cells) <= 1e-9);
    CellSystem ref = construct_cells(Family::A, 5);
    CHECK(fingerprint_close(fingerprint(ref), *oc.fp, 1e-6));
}

TEST_CASE("identical seeds give identical outcomes") {
    SolveOptions so;
    so.restarts = 3;
    so.seed = 99;
    auto g = build_graph(Family::A, 5);
    SolveOutcome a = solve_cells(g, so);
    SolveOutcome b = solve_cells(g, so);
    REQUIRE(a.solved == b.solved);
    CHECK(a.objective == b.objective);
    REQUIRE(a.cells.has_value());
    for (size_t i = 0; i < a.cells->w.size(); ++i) CHECK(a.cells->w[i] == b.cells->w[i]);
}

TEST_CASE("objective is gauge invariant") {
    CellSystem cs = construct_cells(Family::A, 6);
    // push the iterate slightly off the solution
    cs.w[2] *= 1.05;
    cs.w[5] *= std::complex<double>(0.98, 0.03);
    double before = frame_objective(cs);
    for (int draw = 0; draw < 10; ++draw) {
        CellSystem moved = gauge_transform(cs, GaugeFamily::random(*cs.graph, 500 + draw));
        CHECK(frame_objective(moved) == doctest::Approx(before).epsilon(1e-9));
    }
}

TEST_CASE("a triangle-free graph cannot carry cells") {
    auto g = std::make_shared<Graph>("two-cycle", 6);
    int a = g->add_vertex("a");
    int b = g->add_vertex("b");
    g->add_edge(a, b);
    g->add_edge(b, a);
    g->set_pf_weight(a, 1.0);
    g->set_pf_weight(b, 1.0);
    g->freeze();
    SolveOptions so;
    so.restarts = 2;
    so.max_iterations = 50;
    SolveOutcome oc = solve_cells(g, so);
    CHECK(!oc.solved);
    CHECK(oc.objective > 1.0); // type I right-hand sides are unreachable
}

TEST_CASE("classification finds one class on A(6)") {
    SolveOptions so;
    so.restarts = 2;
    so.seed = 11;
    auto buckets = classify_solutions(build_graph(Family::A, 6), 8, so);
    REQUIRE(!buckets.empty());
    CHECK(buckets.size() == 1);
    int total = 0;
    for (const auto& b : buckets) total += b.count;
    CHECK(total == 8);
}

TEST_CASE("classification separates the two A(8)* solutions") {
    SolveOptions so;
    so.restarts = 3;
    so.seed = 21;
    auto buckets = classify_solutions(build_graph(Family::Astar, 8), 24, so);
    CHECK(buckets.size() == 2);
}

TEST_CASE("the exceptional graphs are solved from scratch") {
    for (auto [fam, n] : {std::pair<Family, int>{Family::E2_12, 12},
                          {Family::E8, 8},
                          {Family::E5_12, 12},
                          {Family::E24, 24}}) {
        SolveOptions so;
        so.restarts = 12;
        so.seed = 5;
        so.max_iterations = 1500;
        SolveOutcome oc = solve_cells(build_graph(fam, n), so);
        INFO(GraphId{fam, n}.display());
        REQUIRE(oc.solved);
        bool match = false;
        for (Variant v : legal_variants(fam, n))
            if (fingerprint_close(*oc.fp, fingerprint(construct_cells(fam, n, v)), 1e-6))
                match = true;
        CHECK(match);
    }
}

TEST_CASE("the E1(12) multigraph is solved from scratch") {
    SolveOptions so;
    so.restarts = 20;
    so.seed = 9;
    so.max_iterations = 1500;
    SolveOutcome oc = solve_cells(build_graph(Family::E1_12), so);
    REQUIRE(oc.solved);
    bool mp = fingerprint_close(*oc.fp,
                                fingerprint(construct_cells(Family::E1_12, 12, Variant::Plus)), 1e-6);
    bool mm = fingerprint_close(
        *oc.fp, fingerprint(construct_cells(Family::E1_12, 12, Variant::Minus)), 1e-6);
    CHECK((mp || mm));
}

TEST_CASE("D(9) solutions classify into the two conjugate classes") {
    SolveOptions so;
    so.restarts = 6;
    so.seed = 31;
    so.max_iterations = 600;
    auto buckets = classify_solutions(build_graph(Family::D, 9), 6, so);
    REQUIRE(!buckets.empty());
    Fingerprint w = fingerprint(construct_cells(Family::D, 9));
    Fingerprint wbar = fingerprint(construct_cells(Family::D, 9, Variant::Conjugate));
    for (const auto& b : buckets)
        CHECK((fingerprint_close(b.fp, w, 1e-6) || fingerprint_close(b.fp, wbar, 1e-6)));
}

TEST_CASE("magnitude tying along the Z3 rotation of D(9)*") {
    auto g = build_graph(Family::Dstar, 9);
    // rotation i -> j -> k -> i
    int m = g->vertex_count() / 3;
    std::vector<int> rho(static_cast<size_t>(g->vertex_count()));
    for (int v = 0; v < g->vertex_count(); ++v) rho[static_cast<size_t>(v)] = (v + m) % (3 * m);
    SolveOptions so;
    so.restarts = 8;
    so.seed = 5;
    so.tie_rotation = rho;
    SolveOutcome oc = solve_cells(g, so);
    REQUIRE(oc.solved);
    // the solution magnitudes are Z3-symmetric by construction
    CellSystem ref = construct_cells(Family::Dstar, 9);
    CHECK(fingerprint_close(fingerprint(ref), *oc.fp, 1e-6));
}

TEST_CASE("option validation") {
    auto g = build_graph(Family::A, 5);
    SolveOptions so;
    so.restarts = 0;
    CHECK_THROWS(solve_cells(g, so));
    so.restarts = 1;
    so.residual_tol = 0.0;
    CHECK_THROWS(solve_cells(g, so));
}
