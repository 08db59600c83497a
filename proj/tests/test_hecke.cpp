#include <doctest.h>

#include "cellforge/gauge.hpp"
#include "cellforge/hecke.hpp"

#include <cmath>

using namespace cellforge;

TEST_CASE("printed one-by-one operators") {
    auto ctx = QContext::root_of_unity(12);
    CellSystem e2 = construct_cells(Family::E2_12, 12, Variant::Plus);
    const Graph& g = *e2.graph;
    HeckeOperator u = hecke_operator(e2, g.find_vertex("i"), g.find_vertex("k"));
    REQUIRE(u.m.rows() == 1);
    CHECK(u.m(0, 0).real() == doctest::Approx(qint(ctx, 2)).epsilon(1e-12));
    CHECK(u.m(0, 0).imag() == doctest::Approx(0.0));
    // [2]^2 = [2].[2] trivially satisfies the quadratic relation
    CHECK(std::abs(u.m(0, 0) * u.m(0, 0) - qint(ctx, 2) * u.m(0, 0)) <= 1e-12);
}

TEST_CASE("A-graph operator diagonals") {
    CellSystem a8 = construct_cells(Family::A, 8);
    auto ctx = QContext::root_of_unity(8);
    const Graph& g = *a8.graph;
    // x = (1,1), y = (1,2): diagonal [l1+2]/[l1+1], [l1]/[l1+1]
    HeckeOperator u = hecke_operator(a8, g.find_vertex("(1,1)"), g.find_vertex("(1,2)"));
    REQUIRE(u.m.rows() == 2);
    int row20 = -1, row02 = -1;
    for (int r = 0; r < 2; ++r) {
        if (u.space.row_label(g, r) == "(2,1)") row20 = r;
        if (u.space.row_label(g, r) == "(0,2)") row02 = r;
    }
    REQUIRE(row20 >= 0);
    REQUIRE(row02 >= 0);
    CHECK(u.m(row20, row20).real() == doctest::Approx(qint(ctx, 3) / qint(ctx, 2)).epsilon(1e-12));
    CHECK(u.m(row02, row02).real() == doctest::Approx(qint(ctx, 1) / qint(ctx, 2)).epsilon(1e-12));
}

TEST_CASE("E(8) off-diagonal sign alternates") {
    CellSystem e8 = construct_cells(Family::E8);
    auto ctx = QContext::root_of_unity(8);
    const Graph& g = *e8.graph;
    for (int l = 1; l <= 6; ++l) {
        int x = g.find_vertex("j_" + std::to_string(l));
        int y = g.find_vertex("j_" + std::to_string((l + 3) % 6 + 1)); // j_{l-2}
        HeckeOperator u = hecke_operator(e8, x, y);
        REQUIRE(u.m.rows() == 2);
        double want = (l % 2 == 0 ? -1.0 : 1.0) * std::sqrt(qint(ctx, 3)) / qint(ctx, 2);
        CHECK(u.m(0, 1).real() == doctest::Approx(want).epsilon(1e-11));
    }
}

TEST_CASE("Hecke relation and self-adjointness on constructed systems") {
    for (auto [fam, n, v] : {std::tuple<Family, int, Variant>{Family::A, 7, Variant::Default},
                             {Family::Dstar, 8, Variant::Minus},
                             {Family::E1_12, 12, Variant::Minus},
                             {Family::E5_12, 12, Variant::Default}}) {
        CellSystem cs = construct_cells(fam, n, v);
        HeckeReport rep = check_hecke(cs);
        CHECK(rep.self_adjoint <= 1e-12);
        CHECK(rep.quadratic <= 1e-9);
    }
}

TEST_CASE("Hecke violation grows linearly with a cell perturbation") {
    CellSystem cs = construct_cells(Family::A, 6);
    auto violation = [&](double eps) {
        CellSystem p = cs;
        p.w[3] *= (1.0 + eps);
        return check_hecke(p).quadratic;
    };
    double v3 = violation(1e-3);
    double v4 = violation(1e-4);
    CHECK(v3 > 0.0);
    CHECK(v3 > 5.0 * v4);
    CHECK(v3 < 20.0 * v4);
}

TEST_CASE("connection: straight-line blocks reduce to the identity phase") {
    CellSystem a6 = construct_cells(Family::A, 6);
    const Graph& g = *a6.graph;
    Connection conn = connection(a6);
    // (0,0) -> (2,0) has one path and no closing edge, so U = 0 there and
    // X = q^{2/3} times the identity.
    int b = conn.block_of(g.find_vertex("(0,0)"), g.find_vertex("(2,0)"));
    REQUIRE(b >= 0);
    REQUIRE(conn.x[b].rows() == 1);
    CHECK(std::abs(conn.blocks[b].m(0, 0)) <= 1e-14);
    CHECK(conn.x[b](0, 0).real() == doctest::Approx(std::cos(2.0 * M_PI / 18.0)).epsilon(1e-12));
    CHECK(conn.x[b](0, 0).imag() == doctest::Approx(std::sin(2.0 * M_PI / 18.0)).epsilon(1e-12));
}

TEST_CASE("unitarity and Yang-Baxter on small graphs") {
    CellSystem a4 = construct_cells(Family::A, 4);
    Connection c4 = connection(a4);
    CHECK(check_unitarity(c4) <= 1e-12);
    CHECK(check_yang_baxter(c4) <= 1e-12);

    CellSystem e8s = construct_cells(Family::E8star);
    Connection c8 = connection(e8s);
    CHECK(check_unitarity(c8) <= 1e-8);
    CHECK(check_yang_baxter(c8) <= 1e-8);
}

TEST_CASE("dropping U breaks unitarity by the tabulated amount") {
    CellSystem a6 = construct_cells(Family::A, 6);
    Connection conn = connection(a6);
    for (auto& xm : conn.x)
        xm = std::polar(1.0, 2.0 * M_PI / (3.0 * 6.0)) *
             Eigen::MatrixXcd::Identity(xm.rows(), xm.cols());
    // |q^{4/3} - 1| > 0 does not appear since q^{2/3} I is still unitary;
    // the failure shows up against the Hecke term instead. Check the real
    // statement: with U = 0 the quadratic relation fails on blocks that had
    // a nonzero operator.
    CellSystem zeroed = a6;
    for (auto& z : zeroed.w) z = 0.0;
    Connection czero = connection(zeroed);
    CHECK(check_unitarity(czero) <= 1e-12); // phase times identity is unitary
    HeckeReport rep = check_hecke(zeroed);
    CHECK(rep.quadratic <= 1e-12); // 0 is a (degenerate) Hecke solution
    // but the type I equations reject it
    CHECK(verify_type_i(zeroed) > 0.5);
}

TEST_CASE("Wenzl weights") {
    // j = l vanishes
    CHECK(wenzl_weight(6, 0, 0, 1, 1, 1) == 0.0);
    CHECK(wenzl_weight(8, 2, 1, 2, 3, 2) == 0.0);
    // j = 1, l = 2, k = 1: [l1+2]/[l1+1]
    auto ctx = QContext::root_of_unity(8);
    for (int l1 = 0; l1 <= 2; ++l1) {
        double got = wenzl_weight(8, l1, 1, 1, 1, 2);
        CHECK(got == doctest::Approx(qint(ctx, l1 + 2) / qint(ctx, l1 + 1)).epsilon(1e-12));
    }
    // off-lattice squares are rejected
    CHECK_THROWS(wenzl_weight(6, 3, 0, 1, 1, 2));
    CHECK_THROWS(wenzl_weight(6, 0, 0, 3, 3, 1));
    CHECK_THROWS(wenzl_weight(8, 0, 0, 4, 1, 2));
    // full comparison against the Hecke operators
    for (int n = 4; n <= 12; ++n) {
        CellSystem a = construct_cells(Family::A, n);
        CHECK(wenzl_check(a) <= 1e-10);
    }
}

TEST_CASE("unitarity and Yang-Baxter checks reject perturbed cells") {
    CellSystem cs = construct_cells(Family::E8star);
    Connection good = connection(cs);
    CHECK(check_unitarity(good) <= 1e-12);
    CHECK(check_yang_baxter(good) <= 1e-12);
    CellSystem bad = cs;
    bad.w[1] *= 1.1;
    Connection broken = connection(bad);
    CHECK(check_unitarity(broken) > 1e-3);
    CHECK(check_yang_baxter(broken) > 1e-3);

    // rotating the cube-root branch rescales the braid generator and leaves
    // both properties intact
    CellSystem a5 = construct_cells(Family::A, 5);
    Connection c5 = connection(a5);
    for (auto& xm : c5.x) xm *= std::polar(1.0, 0.37);
    CHECK(check_unitarity(c5) <= 1e-12);
    CHECK(check_yang_baxter(c5) <= 1e-12);
}

TEST_CASE("connection transforms covariantly under matrix gauges") {
    CellSystem cs = construct_cells(Family::D, 9);
    const Graph& g = *cs.graph;
    GaugeFamily fam = GaugeFamily::random(g, 90210);
    CellSystem gs = gauge_transform(cs, fam);
    Connection c1 = connection(cs);
    Connection c2 = connection(gs);
    auto u = [&](int e_new, int e_old) -> std::complex<double> {
        const auto& cls = g.edges_between(g.edge(e_new).source, g.edge(e_new).target);
        int r = -1, c = -1;
        for (size_t i = 0; i < cls.size(); ++i) {
            if (cls[i] == e_new) r = static_cast<int>(i);
            if (cls[i] == e_old) c = static_cast<int>(i);
        }
        if (c < 0) return 0.0; // not parallel
        return fam.u.at({g.edge(e_new).source, g.edge(e_new).target})(r, c);
    };
    auto parallel = [&](int e) { return g.edges_between(g.edge(e).source, g.edge(e).target); };
    double worst = 0.0;
    for (size_t b = 0; b < c1.blocks.size(); ++b) {
        const auto& sp = c1.blocks[b].space;
        for (size_t r = 0; r < sp.paths.size(); ++r)
            for (size_t c = 0; c < sp.paths.size(); ++c) {
                auto [r1, r2] = sp.paths[r];
                auto [r3, r4] = sp.paths[c];
                std::complex<double> want = 0.0;
                for (int s1 : parallel(r1))
                    for (int s2 : parallel(r2))
                        for (int s3 : parallel(r3))
                            for (int s4 : parallel(r4)) {
                                int up = sp.index_of(s1, s2);
                                int lo = sp.index_of(s3, s4);
                                if (up < 0 || lo < 0) continue;
                                want += u(r3, s3) * u(r4, s4) * std::conj(u(r1, s1)) *
                                        std::conj(u(r2, s2)) * c1.x[b](up, lo);
                            }
                worst = std::max(worst,
                                 std::abs(c2.x[b](static_cast<int>(r), static_cast<int>(c)) - want));
            }
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("connection transforms covariantly under gauge") {
    CellSystem cs = construct_cells(Family::A, 6);
    const Graph& g = *cs.graph;
    GaugeFamily fam = GaugeFamily::random(g, 424242);
    CellSystem gs = gauge_transform(cs, fam);
    Connection c1 = connection(cs);
    Connection c2 = connection(gs);
    auto phase = [&](int e) { return fam.u.at({g.edge(e).source, g.edge(e).target})(0, 0); };
    double worst = 0.0;
    for (size_t b = 0; b < c1.blocks.size(); ++b) {
        const auto& sp = c1.blocks[b].space;
        for (size_t r = 0; r < sp.paths.size(); ++r)
            for (size_t c = 0; c < sp.paths.size(); ++c) {
                auto [r1, r2] = sp.paths[r];
                auto [r3, r4] = sp.paths[c];
                // X_gauged^{r1 r2}_{r3 r4} = u(r3) u(r4) conj(u(r1) u(r2)) X
                std::complex<double> want = phase(r3) * phase(r4) * std::conj(phase(r1)) *
                                            std::conj(phase(r2)) *
                                            c1.x[b](static_cast<int>(r), static_cast<int>(c));
                worst = std::max(worst,
                                 std::abs(c2.x[b](static_cast<int>(r), static_cast<int>(c)) - want));
            }
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("fixture tables") {
    for (auto [fam, n, v] : {std::tuple<Family, int, Variant>{Family::A, 6, Variant::Default},
                             {Family::D, 9, Variant::Default},
                             {Family::Astar, 7, Variant::Default},
                             {Family::Astar, 8, Variant::Plus},
                             {Family::Dstar, 9, Variant::Default},
                             {Family::E8, 8, Variant::Default},
                             {Family::E8star, 8, Variant::Default},
                             {Family::E1_12, 12, Variant::Plus},
                             {Family::E2_12, 12, Variant::Plus},
                             {Family::E5_12, 12, Variant::Default},
                             {Family::E24, 24, Variant::Default}}) {
        CellSystem cs = construct_cells(fam, n, v);
        FixtureReport rep = fixture_check(cs);
        INFO(cs.graph->name(), " worst at ", rep.worst);
        CHECK(rep.entries > 0);
        CHECK(rep.max_deviation <= 1e-9);
    }
    CHECK_THROWS(fixture_check(construct_cells(Family::E2_12, 12, Variant::Minus)));
}
