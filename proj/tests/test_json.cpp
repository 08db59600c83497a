#include <doctest.h>

#include "cellforge/json_io.hpp"

#include <cmath>

using namespace cellforge;

TEST_CASE("hex floats round-trip bit-exactly") {
    for (double x : {0.0, 1.0, -1.5, 3.141592653589793, 1.8477590650225735, -2.732050807568877e-7}) {
        std::string s = double_to_hex(x);
        CHECK(hex_to_double(s) == x);
        CHECK(double_to_hex(hex_to_double(s)) == s);
    }
}

TEST_CASE("graph documents round-trip byte-identically") {
    for (auto id : {GraphId{Family::A, 7}, GraphId{Family::D, 9}, GraphId{Family::E1_12, 12}}) {
        auto g = build_graph(id);
        std::string once = graph_to_json(*g);
        auto back = graph_from_json(once);
        CHECK(graph_to_json(*back) == once);
        CHECK(back->vertex_count() == g->vertex_count());
        CHECK(back->edge_count() == g->edge_count());
    }
}

TEST_CASE("cell documents round-trip byte-identically") {
    for (auto [fam, n, v] : {std::tuple<Family, int, Variant>{Family::A, 6, Variant::Default},
                             {Family::D, 9, Variant::Conjugate},
                             {Family::E1_12, 12, Variant::Minus}}) {
        CellSystem cs = construct_cells(fam, n, v);
        std::string once = cells_to_json(cs);
        CellSystem back = cells_from_json(once);
        CHECK(cells_to_json(back) == once);
        REQUIRE(back.w.size() == cs.w.size());
        for (size_t i = 0; i < cs.w.size(); ++i) CHECK(back.w[i] == cs.w[i]);
        CHECK(back.variant == cs.variant);
    }
}

TEST_CASE("reports are well-formed") {
    CellSystem cs = construct_cells(Family::A, 5);
    std::string rep = residual_report_json(cs, 1e-13, 2e-13, 1e-9);
    CHECK(rep.find("\"pass\": true") != std::string::npos);
    std::string csv = hecke_to_csv(cs);
    CHECK(csv.find("x,y,row,col,re,im") == 0);
    CHECK(csv.find("(0,0)") != std::string::npos);
    std::string hj = hecke_to_json(cs);
    CHECK(hj.find("\"operators\"") != std::string::npos);
    CHECK(hj.find("\"rows\"") != std::string::npos);
}
