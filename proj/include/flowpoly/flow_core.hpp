#pragma once

// Flows on G(lambda, n): conservation checks, the unique flow of a spanning
// choice, vertex enumeration through regular subtrees, genericity, and the
// integral-equivalence maps onto the product of scaled simplices.

#include <utility>
#include <vector>

#include "flowpoly/exact.hpp"
#include "flowpoly/partition_graph.hpp"

namespace flowpoly {

// Edge values parallel to the graph's canonical edge order.
struct Flow {
    std::vector<Rat> values;

    bool operator==(const Flow& o) const { return values == o.values; }
    bool operator<(const Flow& o) const { return values < o.values; }
};

// One chosen outgoing edge (canonical edge index) per non-sink vertex. Every
// such choice spans a tree carrying a unique strictly positive a-flow.
struct SpanningChoice {
    std::vector<int> edge_for_vertex;  // index 0 holds the choice for vertex 1
};

// The (n+1) x N matrix whose column for edge (i,j) is e_i - e_j.
class IncidenceMatrix {
public:
    explicit IncidenceMatrix(const FlowGraph& g);
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int at(int r, int c) const { return m_[static_cast<std::size_t>(r) * cols_ + c]; }
    // M * f, length vertex_count.
    std::vector<Rat> apply(const Flow& f) const;

private:
    int rows_, cols_;
    std::vector<int> m_;
};

// True iff f >= 0 and inflow + a_i = outflow at every vertex (sink included,
// with a_{n+1} = -sum a). Throws on length mismatch.
bool validate_flow(const FlowGraph& g, const NetflowVector& a, const Flow& f);

// The unique a-flow supported on the chosen spanning tree, filled in
// increasing vertex order: the chosen edge of v carries a_v plus v's inflow.
Flow tree_flow(const FlowGraph& g, const NetflowVector& a, const SpanningChoice& choice);

// All vertices of F_G(a), one per spanning choice, in lexicographic order of
// the mixed-radix choice tuple (vertex 1 most significant). Deterministic
// regardless of thread count.
std::vector<Flow> enumerate_vertices(const FlowGraph& g, const NetflowVector& a, int threads = 1);

// True iff no two distinct spanning choices carry the same flow; checked by
// exhaustive pairwise comparison (desk scale by design).
bool is_generic(const FlowGraph& g, const NetflowVector& a);

// phi(f) = (f_1, ..., f_n): component i lives on subgraph_Gi(g, i) in its
// canonical edge order. Components with i <= l(lambda) copy f on the out-edges
// of i and route a_p (+ f(i,p) when that edge exists) through each other
// vertex's sink edge; components with i > l(lambda) are the single point of
// F_{G_i}(a). Requires n >= limiting_index(lambda).
std::vector<Flow> product_map(const FlowGraph& g, const Partition& lambda, const NetflowVector& a,
                              const Flow& f);

// Inverse of product_map: out-edge values of vertices i <= l(lambda) are read
// off the components, remaining sink flows are fixed by conservation.
Flow product_map_inverse(const FlowGraph& g, const Partition& lambda, const NetflowVector& a,
                         const std::vector<Flow>& components);

// Coordinates of f_i inside the scaled simplex a_i * Delta_{lambda_i}:
// v_j = f_i(i, n+2-j) for j = 1 .. lambda_i + 1. Empty for i > l(lambda)
// (the polytope degenerates to a point).
std::vector<Rat> simplex_projection(const FlowGraph& gi, const Partition& lambda,
                                    const NetflowVector& a, int i, const Flow& fi);

}  // namespace flowpoly
