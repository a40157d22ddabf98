#pragma once

// JSON wire formats. Graphs serialize as {"n": int, "edges": [[i,j],...]} in
// canonical edge order; flows as {"edges": [...], "values": ["num/den",...]}
// parallel to the edges. All big integers travel as decimal strings.

#include <string>
#include <vector>

#include "json.hpp"

#include "flowpoly/exact.hpp"
#include "flowpoly/flow_core.hpp"
#include "flowpoly/partition_graph.hpp"

namespace flowpoly {

nlohmann::json graph_to_json(const FlowGraph& g);
FlowGraph graph_from_json(const nlohmann::json& j);

nlohmann::json flow_to_json(const FlowGraph& g, const Flow& f);
Flow flow_from_json(const FlowGraph& g, const nlohmann::json& j);

nlohmann::json int_vector_to_json(const std::vector<Int>& v);
std::vector<Int> int_vector_from_json(const nlohmann::json& j);

nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace flowpoly
