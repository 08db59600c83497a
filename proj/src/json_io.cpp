#include "cellforge/json_io.hpp"
#include "cellforge/hecke.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace cellforge {

using ordered_json = nlohmann::ordered_json;

std::string double_to_hex(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%a", x);
    return buf;
}

double hex_to_double(const std::string& s) {
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str()) throw std::invalid_argument("bad hex float: " + s);
    return v;
}

std::string graph_to_json(const Graph& g) {
    ordered_json j;
    j["name"] = g.name();
    j["coxeter_n"] = g.coxeter_n();
    j["vertices"] = ordered_json::array();
    for (const auto& v : g.vertices()) j["vertices"].push_back({{"id", v.id}, {"label", v.label}});
    j["edges"] = ordered_json::array();
    for (const auto& e : g.edges())
        j["edges"].push_back(
            {{"id", e.id}, {"source", e.source}, {"target", e.target}, {"tag", e.tag}});
    ordered_json pw = ordered_json::object();
    for (const auto& v : g.vertices()) pw[std::to_string(v.id)] = double_to_hex(g.pf_weight(v.id));
    j["pf_weights"] = pw;
    return j.dump(2) + "\n";
}

GraphPtr graph_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    auto g = std::make_shared<Graph>(j.at("name").get<std::string>(), j.at("coxeter_n").get<int>());
    for (const auto& v : j.at("vertices")) {
        int id = g->add_vertex(v.at("label").get<std::string>());
        if (id != v.at("id").get<int>()) throw std::invalid_argument("graph json: ids must be dense");
    }
    for (const auto& e : j.at("edges")) {
        int id = g->add_edge(e.at("source").get<int>(), e.at("target").get<int>(),
                             e.at("tag").get<std::string>());
        if (id != e.at("id").get<int>()) throw std::invalid_argument("graph json: ids must be dense");
    }
    for (const auto& [key, val] : j.at("pf_weights").items())
        g->set_pf_weight(std::stoi(key), hex_to_double(val.get<std::string>()));
    g->freeze();
    return g;
}

std::string cells_to_json(const CellSystem& cs) {
    ordered_json j;
    j["graph"] = {{"selector", cs.id.display()},
                  {"name", cs.graph->name()},
                  {"coxeter_n", cs.graph->coxeter_n()}};
    j["variant"] = variant_name(cs.variant);
    j["cells"] = ordered_json::array();
    for (size_t i = 0; i < cs.w.size(); ++i) {
        const auto& t = cs.graph->triangles()[i];
        j["cells"].push_back({{"triangle", {t.e[0], t.e[1], t.e[2]}},
                              {"re", double_to_hex(cs.w[i].real())},
                              {"im", double_to_hex(cs.w[i].imag())}});
    }
    return j.dump(2) + "\n";
}

CellSystem cells_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    GraphId id = parse_selector(j.at("graph").at("selector").get<std::string>());
    CellSystem cs;
    cs.id = id;
    cs.graph = build_graph(id);
    cs.variant = parse_variant(j.at("variant").get<std::string>());
    cs.w.assign(cs.graph->triangles().size(), 0.0);
    for (const auto& c : j.at("cells")) {
        auto tri = c.at("triangle");
        int idx = cs.graph->triangle_index(tri.at(0).get<int>(), tri.at(1).get<int>(),
                                           tri.at(2).get<int>());
        if (idx < 0) throw std::invalid_argument("cells json: unknown triangle");
        cs.w[static_cast<size_t>(idx)] = {hex_to_double(c.at("re").get<std::string>()),
                                          hex_to_double(c.at("im").get<std::string>())};
    }
    return cs;
}

std::string residual_report_json(const CellSystem& cs, double type_i, double type_ii,
                                 double tolerance) {
    ordered_json j;
    j["graph"] = cs.id.display();
    j["variant"] = variant_name(cs.variant);
    j["type_i_max"] = type_i;
    j["type_ii_max"] = type_ii;
    j["tolerance"] = tolerance;
    j["pass"] = type_i <= tolerance && type_ii <= tolerance;
    return j.dump(2) + "\n";
}

std::string solve_report_json(const GraphId& id, const SolveOutcome& outcome) {
    ordered_json j;
    j["graph"] = id.display();
    j["status"] = outcome.solved ? "solved" : "failed";
    j["objective"] = outcome.objective;
    j["iterations"] = outcome.iterations;
    j["restarts"] = outcome.restarts_used;
    if (outcome.fp) j["fingerprint"] = fingerprint_digest(*outcome.fp);
    if (outcome.cells) j["cells"] = ordered_json::parse(cells_to_json(*outcome.cells));
    return j.dump(2) + "\n";
}

std::string hecke_to_json(const CellSystem& cs) {
    ordered_json j;
    j["graph"] = cs.id.display();
    j["variant"] = variant_name(cs.variant);
    j["operators"] = ordered_json::array();
    for (const auto& [x, y] : path_pairs(*cs.graph)) {
        HeckeOperator op = hecke_operator(cs, x, y);
        int np = static_cast<int>(op.space.paths.size());
        ordered_json block;
        block["x"] = cs.graph->vertex(x).label;
        block["y"] = cs.graph->vertex(y).label;
        block["rows"] = ordered_json::array();
        for (int r = 0; r < np; ++r) block["rows"].push_back(op.space.row_label(*cs.graph, r));
        block["entries"] = ordered_json::array();
        for (int r = 0; r < np; ++r) {
            ordered_json row = ordered_json::array();
            for (int c = 0; c < np; ++c)
                row.push_back({{"re", double_to_hex(op.m(r, c).real())},
                               {"im", double_to_hex(op.m(r, c).imag())}});
            block["entries"].push_back(row);
        }
        j["operators"].push_back(block);
    }
    return j.dump(2) + "\n";
}

std::string hecke_to_csv(const CellSystem& cs) {
    std::ostringstream os;
    os.precision(17);
    os << "x,y,row,col,re,im\n";
    for (const auto& [x, y] : path_pairs(*cs.graph)) {
        HeckeOperator op = hecke_operator(cs, x, y);
        int np = static_cast<int>(op.space.paths.size());
        for (int r = 0; r < np; ++r)
            for (int c = 0; c < np; ++c)
                os << cs.graph->vertex(x).label << "," << cs.graph->vertex(y).label << ","
                   << op.space.row_label(*cs.graph, r) << "," << op.space.row_label(*cs.graph, c)
                   << "," << op.m(r, c).real() << "," << op.m(r, c).imag() << "\n";
    }
    return os.str();
}

} // namespace cellforge
