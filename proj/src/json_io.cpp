#include "flowpoly/json_io.hpp"

namespace flowpoly {

using nlohmann::json;

json graph_to_json(const FlowGraph& g) {
    json edges = json::array();
    for (const auto& [i, j] : g.edges) edges.push_back({i, j});
    return json{{"n", g.n()}, {"edges", edges}};
}

FlowGraph graph_from_json(const json& j) {
    FlowGraph g;
    g.vertex_count = j.at("n").get<int>() + 1;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("bad edge in graph JSON");
        g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

json flow_to_json(const FlowGraph& g, const Flow& f) {
    if (f.values.size() != g.edges.size())
        throw std::invalid_argument("flow length does not match edge count");
    json edges = json::array();
    for (const auto& [i, j] : g.edges) edges.push_back({i, j});
    json values = json::array();
    for (const Rat& v : f.values) values.push_back(rat_to_string(v));
    return json{{"edges", edges}, {"values", values}};
}

Flow flow_from_json(const FlowGraph& g, const json& j) {
    const auto& edges = j.at("edges");
    if (edges.size() != g.edges.size())
        throw std::invalid_argument("flow JSON edge count does not match graph");
    for (std::size_t k = 0; k < g.edges.size(); ++k)
        if (edges[k][0].get<int>() != g.edges[k].first ||
            edges[k][1].get<int>() != g.edges[k].second)
            throw std::invalid_argument("flow JSON edges are not in the graph's canonical order");
    Flow f;
    for (const auto& v : j.at("values")) f.values.push_back(rat_from_string(v.get<std::string>()));
    if (f.values.size() != g.edges.size())
        throw std::invalid_argument("flow JSON value count does not match graph");
    return f;
}

json int_vector_to_json(const std::vector<Int>& v) {
    json out = json::array();
    for (const Int& x : v) out.push_back(int_to_string(x));
    return out;
}

std::vector<Int> int_vector_from_json(const json& j) {
    std::vector<Int> out;
    for (const auto& x : j) out.push_back(int_from_string(x.get<std::string>()));
    return out;
}

json polynomial_to_json(const Polynomial& p) {
    json out = json::array();
    for (const std::string& s : p.to_strings()) out.push_back(s);
    return out;
}

Polynomial polynomial_from_json(const json& j) {
    std::vector<Rat> coeffs;
    for (const auto& x : j) coeffs.push_back(rat_from_string(x.get<std::string>()));
    return Polynomial(std::move(coeffs));
}

}  // namespace flowpoly
