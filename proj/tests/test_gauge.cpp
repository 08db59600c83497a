#include <doctest.h>

#include "cellforge/gauge.hpp"

#include <cmath>

using namespace cellforge;

TEST_CASE("identity gauge leaves cells untouched") {
    CellSystem cs = construct_cells(Family::E1_12, 12, Variant::Plus);
    CellSystem out = gauge_transform(cs, GaugeFamily::identity(*cs.graph));
    for (size_t i = 0; i < cs.w.size(); ++i) CHECK(std::abs(out.w[i] - cs.w[i]) <= 1e-15);
}

TEST_CASE("scalar gauges preserve magnitudes and axioms") {
    CellSystem cs = construct_cells(Family::A, 6);
    GaugeFamily fam = GaugeFamily::random(*cs.graph, 17);
    CellSystem out = gauge_transform(cs, fam);
    for (size_t i = 0; i < cs.w.size(); ++i)
        CHECK(std::abs(out.w[i]) == doctest::Approx(std::abs(cs.w[i])).epsilon(1e-12));
    CHECK(verify_type_i(out) <= 1e-9);
    CHECK(verify_type_ii(out) <= 1e-9);
}

TEST_CASE("matrix gauges on the multigraphs preserve axioms and fingerprints") {
    for (auto [fam, n, v] : {std::tuple<Family, int, Variant>{Family::D, 9, Variant::Default},
                             {Family::E1_12, 12, Variant::Plus}}) {
        CellSystem cs = construct_cells(fam, n, v);
        Fingerprint fp = fingerprint(cs);
        for (int draw = 0; draw < 25; ++draw) {
            GaugeFamily g = GaugeFamily::random(*cs.graph, 1000 + draw);
            CHECK(g.unitarity_defect() <= 1e-12);
            CellSystem out = gauge_transform(cs, g);
            CHECK(verify_type_i(out) <= 1e-9);
            CHECK(verify_type_ii(out) <= 1e-9);
            CHECK(fingerprint_close(fp, fingerprint(out), 1e-6));
        }
    }
}

TEST_CASE("non-unitary gauge is rejected") {
    CellSystem cs = construct_cells(Family::A, 5);
    GaugeFamily fam = GaugeFamily::identity(*cs.graph);
    fam.u.begin()->second(0, 0) = 2.0;
    CHECK_THROWS(gauge_transform(cs, fam));
}

TEST_CASE("equivalence on simple graphs is decided exactly") {
    CellSystem a6 = construct_cells(Family::A, 6);
    GaugeFamily fam = GaugeFamily::random(*a6.graph, 5);
    CellSystem moved = gauge_transform(a6, fam);
    auto res = equivalent(a6, moved);
    REQUIRE(res.status == EquivStatus::Equivalent);
    CellSystem probe = gauge_transform(moved, res.witness);
    for (size_t i = 0; i < a6.w.size(); ++i) CHECK(std::abs(probe.w[i] - a6.w[i]) <= 1e-8);

    // A(8)* +/- differ already in magnitudes
    auto plus = construct_cells(Family::Astar, 8, Variant::Plus);
    auto minus = construct_cells(Family::Astar, 8, Variant::Minus);
    auto r2 = equivalent(plus, minus);
    CHECK(r2.status == EquivStatus::Inequivalent);
    CHECK(!r2.obstruction.empty());

    // the loop-cube triangles force cube roots in the phase solve: a system
    // re-phased on E(8)* must still be recognized
    auto e8s = construct_cells(Family::E8star);
    GaugeFamily f8 = GaugeFamily::random(*e8s.graph, 23);
    auto r3 = equivalent(e8s, gauge_transform(e8s, f8));
    CHECK(r3.status == EquivStatus::Equivalent);
}

TEST_CASE("conjugation swaps the two E1(12) solutions") {
    EquivOptions eo;
    eo.restarts = 30;
    auto plus = construct_cells(Family::E1_12, 12, Variant::Plus);
    auto minus = construct_cells(Family::E1_12, 12, Variant::Minus);
    CHECK(equivalent(conjugate(plus), minus, eo).status == EquivStatus::Equivalent);
    CHECK(equivalent(conjugate(minus), plus, eo).status == EquivStatus::Equivalent);
}

TEST_CASE("the two E2(12) solutions are real and inequivalent") {
    auto plus = construct_cells(Family::E2_12, 12, Variant::Plus);
    auto minus = construct_cells(Family::E2_12, 12, Variant::Minus);
    for (const auto& z : plus.w) CHECK(z.imag() == 0.0);
    CHECK(equivalent(plus, minus).status == EquivStatus::Inequivalent);
    // conjugation acts trivially on real cells
    auto cp = conjugate(plus);
    for (size_t i = 0; i < plus.w.size(); ++i) CHECK(cp.w[i] == plus.w[i]);
}

TEST_CASE("E1(12) solutions are inequivalent with distinct fingerprints") {
    auto plus = construct_cells(Family::E1_12, 12, Variant::Plus);
    auto minus = construct_cells(Family::E1_12, 12, Variant::Minus);
    CHECK(!fingerprint_close(fingerprint(plus), fingerprint(minus), 1e-6));
    CHECK(equivalent(plus, minus).status == EquivStatus::Inequivalent);
}

TEST_CASE("D(9) conjugate equals the copy-swapped solution up to gauge") {
    CellSystem w = construct_cells(Family::D, 9);
    CellSystem wbar = construct_cells(Family::D, 9, Variant::Conjugate);
    // Swap the cells on the triangles through copies 2 and 3 of the triple
    // point: the relabeled default solution.
    CellSystem swapped = w;
    const Graph& g = *w.graph;
    int c2 = g.find_vertex("(2,2)_2");
    int c3 = g.find_vertex("(2,2)_3");
    REQUIRE(c2 >= 0);
    REQUIRE(c3 >= 0);
    auto through = [&](int tri, int v) {
        for (int e : g.triangles()[tri].e)
            if (g.edge(e).source == v || g.edge(e).target == v) return true;
        return false;
    };
    auto tag_of = [&](int tri) {
        for (int e : g.triangles()[tri].e)
            if (!g.edge(e).tag.empty()) return g.edge(e).tag;
        return std::string();
    };
    for (size_t t = 0; t < w.w.size(); ++t) {
        if (!through(static_cast<int>(t), c2) && !through(static_cast<int>(t), c3)) continue;
        // find the partner triangle with copies 2 and 3 exchanged
        int other = -1;
        for (size_t u = 0; u < w.w.size(); ++u) {
            if (u == t) continue;
            bool t2 = through(static_cast<int>(t), c2);
            if (t2 && through(static_cast<int>(u), c3) && tag_of(static_cast<int>(u)) == tag_of(static_cast<int>(t)))
                other = static_cast<int>(u);
            if (!t2 && through(static_cast<int>(u), c2) && tag_of(static_cast<int>(u)) == tag_of(static_cast<int>(t)))
                other = static_cast<int>(u);
        }
        REQUIRE(other >= 0);
        swapped.w[t] = w.w[static_cast<size_t>(other)];
    }
    CHECK(verify_type_i(swapped) <= 1e-9);
    CHECK(verify_type_ii(swapped) <= 1e-9);
    auto res = equivalent(wbar, swapped, [] {
        EquivOptions o;
        o.restarts = 30;
        return o;
    }());
    CHECK(res.status == EquivStatus::Equivalent);
}

TEST_CASE("graph mismatch is an error") {
    auto a5 = construct_cells(Family::A, 5);
    auto a6 = construct_cells(Family::A, 6);
    CHECK_THROWS(equivalent(a5, a6));
}

// The phase solve runs over a 40-triangle incidence lattice here; exercises
// the integer elimination on the largest simple catalog graph.
TEST_CASE("re-phased E(24) is recognized with a witness") {
    auto e24 = construct_cells(Family::E24);
    GaugeFamily fam = GaugeFamily::random(*e24.graph, 777);
    auto res = equivalent(e24, gauge_transform(e24, fam));
    REQUIRE(res.status == EquivStatus::Equivalent);
}
