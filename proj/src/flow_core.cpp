#include "flowpoly/flow_core.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace flowpoly {

IncidenceMatrix::IncidenceMatrix(const FlowGraph& g)
    : rows_(g.vertex_count), cols_(g.edge_count()), m_(static_cast<std::size_t>(rows_) * cols_, 0) {
    for (int k = 0; k < cols_; ++k) {
        const auto& [i, j] = g.edges[k];
        m_[static_cast<std::size_t>(i - 1) * cols_ + k] = 1;
        m_[static_cast<std::size_t>(j - 1) * cols_ + k] = -1;
    }
}

std::vector<Rat> IncidenceMatrix::apply(const Flow& f) const {
    if (static_cast<int>(f.values.size()) != cols_)
        throw std::invalid_argument("flow length does not match edge count");
    std::vector<Rat> out(rows_, Rat(0));
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) {
            const int coef = at(r, c);
            if (coef == 1)
                out[r] += f.values[c];
            else if (coef == -1)
                out[r] -= f.values[c];
        }
    return out;
}

bool validate_flow(const FlowGraph& g, const NetflowVector& a, const Flow& f) {
    if (static_cast<int>(f.values.size()) != g.edge_count())
        throw std::invalid_argument("flow has " + std::to_string(f.values.size()) +
                                    " values, graph has " + std::to_string(g.edge_count()) +
                                    " edges");
    if (a.length() != g.n()) throw std::invalid_argument("netflow length does not match graph");
    for (const Rat& v : f.values)
        if (sgn(v) < 0) return false;
    const std::vector<Rat> balance = IncidenceMatrix(g).apply(f);
    for (int v = 1; v <= g.n(); ++v)
        if (balance[v - 1] != Rat(a.at(v))) return false;
    return balance[g.n()] == Rat(-a.total());
}

Flow tree_flow(const FlowGraph& g, const NetflowVector& a, const SpanningChoice& choice) {
    if (static_cast<int>(choice.edge_for_vertex.size()) != g.n())
        throw std::invalid_argument("spanning choice must pick one edge per non-sink vertex");
    Flow f;
    f.values.assign(g.edges.size(), Rat(0));
    std::vector<Rat> inflow(g.vertex_count + 1, Rat(0));
    for (int v = 1; v <= g.n(); ++v) {
        const int k = choice.edge_for_vertex[v - 1];
        if (k < 0 || k >= g.edge_count() || g.edges[k].first != v)
            throw std::invalid_argument("chosen edge for vertex " + std::to_string(v) +
                                        " is not an out-edge");
        const Rat supply = Rat(a.at(v)) + inflow[v];
        f.values[k] = supply;
        inflow[g.edges[k].second] += supply;
    }
    return f;
}

namespace {

// Mixed-radix decode of a vertex index into a spanning choice, vertex 1 most
// significant. Radices are the outdegrees.
SpanningChoice decode_choice(const std::vector<std::vector<int>>& outs, int n,
                             unsigned long long index) {
    SpanningChoice c;
    c.edge_for_vertex.assign(n, -1);
    for (int v = n; v >= 1; --v) {
        const auto& o = outs[v];
        c.edge_for_vertex[v - 1] = o[index % o.size()];
        index /= o.size();
    }
    return c;
}

}  // namespace

std::vector<Flow> enumerate_vertices(const FlowGraph& g, const NetflowVector& a, int threads) {
    if (a.length() != g.n()) throw std::invalid_argument("netflow length does not match graph");
    const auto outs = g.out_edges_by_vertex();
    unsigned long long total = 1;
    for (int v = 1; v <= g.n(); ++v) {
        if (outs[v].empty())
            throw std::invalid_argument("vertex " + std::to_string(v) + " has no outgoing edge");
        total *= outs[v].size();
    }
    std::vector<Flow> result(total);
    auto fill_range = [&](unsigned long long lo, unsigned long long hi) {
        for (unsigned long long idx = lo; idx < hi; ++idx)
            result[idx] = tree_flow(g, a, decode_choice(outs, g.n(), idx));
    };
    if (threads <= 1 || total < 64) {
        fill_range(0, total);
    } else {
        const unsigned long long t = std::min<unsigned long long>(threads, total);
        std::vector<std::thread> pool;
        for (unsigned long long w = 0; w < t; ++w)
            pool.emplace_back(fill_range, total * w / t, total * (w + 1) / t);
        for (auto& th : pool) th.join();
    }
    return result;
}

bool is_generic(const FlowGraph& g, const NetflowVector& a) {
    const std::vector<Flow> flows = enumerate_vertices(g, a);
    std::set<std::vector<Rat>> seen;
    for (const Flow& f : flows)
        if (!seen.insert(f.values).second) return false;
    return true;
}

std::vector<Flow> product_map(const FlowGraph& g, const Partition& lambda, const NetflowVector& a,
                              const Flow& f) {
    const int n = g.n();
    if (n < limiting_index(lambda))
        throw std::invalid_argument("product_map needs n >= lambda_1 + l(lambda) = " +
                                    std::to_string(limiting_index(lambda)));
    if (static_cast<int>(f.values.size()) != g.edge_count())
        throw std::invalid_argument("flow length does not match edge count");
    const int l = lambda.length();
    const int sink = g.vertex_count;
    std::vector<Flow> components;
    components.reserve(n);
    for (int i = 1; i <= n; ++i) {
        const FlowGraph gi = subgraph_Gi(g, i);
        Flow fi;
        fi.values.reserve(gi.edges.size());
        for (const auto& [p, q] : gi.edges) {
            if (p == i && i <= l) {
                fi.values.push_back(f.values[g.edge_index(p, q)]);
            } else if (q == sink && i <= l && g.edge_index(i, p) >= 0) {
                fi.values.push_back(Rat(a.at(p)) + f.values[g.edge_index(i, p)]);
            } else {
                fi.values.push_back(Rat(a.at(p)));
            }
        }
        components.push_back(std::move(fi));
    }
    return components;
}

Flow product_map_inverse(const FlowGraph& g, const Partition& lambda, const NetflowVector& a,
                         const std::vector<Flow>& components) {
    const int n = g.n();
    if (n < limiting_index(lambda))
        throw std::invalid_argument("product_map needs n >= lambda_1 + l(lambda) = " +
                                    std::to_string(limiting_index(lambda)));
    if (static_cast<int>(components.size()) != n)
        throw std::invalid_argument("expected one component per non-sink vertex");
    const int l = lambda.length();
    const int sink = g.vertex_count;
    Flow f;
    f.values.assign(g.edges.size(), Rat(0));
    std::vector<Rat> inflow(g.vertex_count + 1, Rat(0));
    for (int p = 1; p <= l; ++p) {
        const FlowGraph gp = subgraph_Gi(g, p);
        const Flow& fp = components[p - 1];
        if (fp.values.size() != gp.edges.size())
            throw std::invalid_argument("component " + std::to_string(p) +
                                        " does not match subgraph edge count");
        for (int k = 0; k < gp.edge_count(); ++k) {
            const auto& [u, q] = gp.edges[k];
            if (u != p) continue;
            f.values[g.edge_index(u, q)] = fp.values[k];
            if (q != sink) inflow[q] += fp.values[k];
        }
    }
    // sink flows of vertices beyond l(lambda) are fixed by conservation
    for (int p = l + 1; p <= n; ++p)
        f.values[g.edge_index(p, sink)] = Rat(a.at(p)) + inflow[p];
    return f;
}

std::vector<Rat> simplex_projection(const FlowGraph& gi, const Partition& lambda,
                                    const NetflowVector& a, int i, const Flow& fi) {
    if (fi.values.size() != gi.edges.size())
        throw std::invalid_argument("flow length does not match subgraph edge count");
    (void)a;
    if (i > lambda.length()) return {};  // the polytope is a point
    const int n = gi.n();
    std::vector<Rat> v;
    v.reserve(lambda.part(i) + 1);
    for (int j = 1; j <= lambda.part(i) + 1; ++j) {
        const int k = gi.edge_index(i, n + 2 - j);
        if (k < 0) throw std::invalid_argument("subgraph is missing an out-edge of its vertex");
        v.push_back(fi.values[k]);
    }
    return v;
}

}  // namespace flowpoly
