#pragma once

// Partitions and the graphs G(lambda, n) built from them.
//
// Placing the Young diagram of lambda flush with the top-right corner of an
// n x n grid (row i occupying columns n-lambda_i+1 .. n) and adding a full
// column of sink edges yields the directed graph G(lambda, n) on [n+1].

#include <string>
#include <utility>
#include <vector>

#include "flowpoly/exact.hpp"

namespace flowpoly {

struct Partition {
    std::vector<int> parts;  // weakly decreasing, all >= 1, nonempty

    explicit Partition(std::vector<int> p);
    // Comma-separated decreasing positive integers, e.g. "4,3,2,1".
    static Partition parse(const std::string& text);
    // (m, m-1, ..., 1); G(staircase(n-1), n) is the complete graph K_{n+1}.
    static Partition staircase(int m);

    int length() const { return static_cast<int>(parts.size()); }
    int size() const;  // |lambda|
    int part(int i) const { return i <= length() ? parts[i - 1] : 0; }  // 1-based, 0 beyond
    std::string to_string() const;

    bool operator==(const Partition& o) const { return parts == o.parts; }
};

// Loopless forward-edge DAG on [vertex_count] with vertex_count-1 = n and a
// canonical edge order: Y-edges sorted lexicographically by (source, target),
// then sink edges (1,n+1) .. (n,n+1). Flows index into this order.
struct FlowGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;

    int n() const { return vertex_count - 1; }
    int edge_count() const { return static_cast<int>(edges.size()); }
    // Index into the canonical order; -1 if the edge is absent.
    int edge_index(int from, int to) const;
    std::vector<std::vector<int>> out_edges_by_vertex() const;
    int outdegree(int v) const;

    bool operator==(const FlowGraph& o) const {
        return vertex_count == o.vertex_count && edges == o.edges;
    }
};

// Strictly positive netflow entries a_1..a_n; the sink absorbs -sum(a).
struct NetflowVector {
    std::vector<Int> entries;

    explicit NetflowVector(std::vector<Int> e);
    static NetflowVector ones(int n);
    int length() const { return static_cast<int>(entries.size()); }
    const Int& at(int i) const { return entries[i - 1]; }  // 1-based
    Int total() const;
};

// n is admissible for lambda when n - i >= lambda_i for every row i.
bool is_admissible(const Partition& lambda, int n);
// Throws std::invalid_argument naming the first violated row.
void check_admissible(const Partition& lambda, int n);

// lambda_1 + l(lambda): from this index on, all members of the family are
// integrally equivalent to the product of scaled simplices.
int limiting_index(const Partition& lambda);
// Smallest admissible n, max_i(lambda_i + i).
int minimal_admissible_index(const Partition& lambda);

FlowGraph build_graph(const Partition& lambda, int n);

// K_m as a forward DAG in the same canonical order build_graph produces for
// the staircase partition.
FlowGraph complete_graph(int vertex_count);

// Edges out of vertex i plus all sink edges, on the same vertex set.
FlowGraph subgraph_Gi(const FlowGraph& g, int i);

// Drop the sink and every edge into it.
FlowGraph restrict_to_sources(const FlowGraph& g);

// t_i = outdeg(i) - 1 for i in [n]. Throws if some non-sink vertex has no
// outgoing edge.
std::vector<int> outdegree_shift(const FlowGraph& g);

}  // namespace flowpoly
