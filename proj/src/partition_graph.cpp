#include "flowpoly/partition_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace flowpoly {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    if (parts.empty()) throw std::invalid_argument("partition must have at least one part");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1)
            throw std::invalid_argument("partition parts must be positive, got " +
                                        std::to_string(parts[i]));
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad partition entry '" + item + "'");
        }
        if (pos != item.size()) throw std::invalid_argument("bad partition entry '" + item + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

Partition Partition::staircase(int m) {
    if (m < 1) throw std::invalid_argument("staircase needs m >= 1");
    std::vector<int> parts(m);
    for (int i = 0; i < m; ++i) parts[i] = m - i;
    return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts[i]);
    }
    return out;
}

int FlowGraph::edge_index(int from, int to) const {
    for (int k = 0; k < edge_count(); ++k)
        if (edges[k].first == from && edges[k].second == to) return k;
    return -1;
}

std::vector<std::vector<int>> FlowGraph::out_edges_by_vertex() const {
    std::vector<std::vector<int>> out(vertex_count + 1);
    for (int k = 0; k < edge_count(); ++k) out[edges[k].first].push_back(k);
    return out;
}

int FlowGraph::outdegree(int v) const {
    int d = 0;
    for (const auto& e : edges) d += (e.first == v);
    return d;
}

NetflowVector::NetflowVector(std::vector<Int> e) : entries(std::move(e)) {
    if (entries.empty()) throw std::invalid_argument("netflow must be nonempty");
    for (const Int& v : entries)
        if (sgn(v) <= 0)
            throw std::invalid_argument("netflow entries must be positive, got " + v.get_str());
}

NetflowVector NetflowVector::ones(int n) {
    return NetflowVector(std::vector<Int>(static_cast<std::size_t>(n), Int(1)));
}

Int NetflowVector::total() const {
    Int s = 0;
    for (const Int& v : entries) s += v;
    return s;
}

bool is_admissible(const Partition& lambda, int n) {
    for (int i = 1; i <= lambda.length(); ++i)
        if (n - i < lambda.part(i)) return false;
    return true;
}

void check_admissible(const Partition& lambda, int n) {
    for (int i = 1; i <= lambda.length(); ++i)
        if (n - i < lambda.part(i))
            throw std::invalid_argument(
                "n=" + std::to_string(n) + " is inadmissible for partition " + lambda.to_string() +
                ": row " + std::to_string(i) + " needs n - " + std::to_string(i) +
                " >= " + std::to_string(lambda.part(i)));
}

int limiting_index(const Partition& lambda) { return lambda.parts[0] + lambda.length(); }

int minimal_admissible_index(const Partition& lambda) {
    int m = 0;
    for (int i = 1; i <= lambda.length(); ++i) m = std::max(m, lambda.part(i) + i);
    return m;
}

FlowGraph build_graph(const Partition& lambda, int n) {
    check_admissible(lambda, n);
    FlowGraph g;
    g.vertex_count = n + 1;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = n - lambda.part(i) + 1; j <= n; ++j) g.edges.emplace_back(i, j);
    for (int i = 1; i <= n; ++i) g.edges.emplace_back(i, n + 1);
    return g;
}

FlowGraph complete_graph(int vertex_count) {
    if (vertex_count < 2) throw std::invalid_argument("complete_graph needs >= 2 vertices");
    FlowGraph g;
    g.vertex_count = vertex_count;
    const int n = vertex_count - 1;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) g.edges.emplace_back(i, j);
    for (int i = 1; i <= n; ++i) g.edges.emplace_back(i, n + 1);
    return g;
}

FlowGraph subgraph_Gi(const FlowGraph& g, int i) {
    if (i < 1 || i > g.n())
        throw std::invalid_argument("subgraph_Gi: vertex " + std::to_string(i) + " out of range");
    FlowGraph out;
    out.vertex_count = g.vertex_count;
    const int sink = g.vertex_count;
    for (const auto& e : g.edges)
        if (e.first == i && e.second != sink) out.edges.push_back(e);
    for (int v = 1; v <= g.n(); ++v)
        if (g.edge_index(v, sink) >= 0) out.edges.emplace_back(v, sink);
    return out;
}

FlowGraph restrict_to_sources(const FlowGraph& g) {
    FlowGraph out;
    out.vertex_count = g.vertex_count - 1;
    const int sink = g.vertex_count;
    for (const auto& e : g.edges)
        if (e.second != sink) out.edges.push_back(e);
    return out;
}

std::vector<int> outdegree_shift(const FlowGraph& g) {
    std::vector<int> t(g.n());
    for (int v = 1; v <= g.n(); ++v) {
        const int d = g.outdegree(v);
        if (d == 0)
            throw std::invalid_argument("vertex " + std::to_string(v) + " has outdegree 0");
        t[v - 1] = d - 1;
    }
    return t;
}

}  // namespace flowpoly
