#ifndef CELLFORGE_JSON_IO_HPP
#define CELLFORGE_JSON_IO_HPP

#include "cellforge/cells.hpp"
#include "cellforge/solver.hpp"

#include <string>

namespace cellforge {

// Doubles are serialized as hex-float strings ("0x1.8p+1") so that an
// export / import / export cycle is byte-identical.
std::string double_to_hex(double x);
double hex_to_double(const std::string& s);

// {name, coxeter_n, vertices:[{id,label}], edges:[{id,source,target,tag}],
//  pf_weights:{id: hex}} with stable field order.
std::string graph_to_json(const Graph& g);
GraphPtr graph_from_json(const std::string& text);

// {graph:{selector,name,coxeter_n}, variant, cells:[{triangle:[e,e,e],re,im}]}
std::string cells_to_json(const CellSystem& cs);
CellSystem cells_from_json(const std::string& text);

std::string residual_report_json(const CellSystem& cs, double type_i, double type_ii,
                                 double tolerance);
std::string solve_report_json(const GraphId& id, const SolveOutcome& outcome);

// U matrices as CSV or JSON, rows labeled by intermediate vertex and edge
// tags.
std::string hecke_to_csv(const CellSystem& cs);
std::string hecke_to_json(const CellSystem& cs);

} // namespace cellforge

#endif
