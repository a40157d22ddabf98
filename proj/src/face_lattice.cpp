#include "flowpoly/face_lattice.hpp"

#include <algorithm>
#include <set>

#include "flowpoly/flow_core.hpp"

namespace flowpoly {

bool is_regular(const FlowGraph& g, const std::vector<std::pair<int, int>>& subset,
                const NetflowVector& a) {
    if (a.length() != g.n()) throw std::invalid_argument("netflow length does not match graph");
    std::vector<bool> has_out(g.vertex_count + 1, false);
    for (const auto& [i, j] : subset) {
        if (g.edge_index(i, j) < 0)
            throw std::invalid_argument("edge (" + std::to_string(i) + "," + std::to_string(j) +
                                        ") is not in the graph");
        has_out[i] = true;
    }
    for (int v = 1; v <= g.n(); ++v)
        if (!has_out[v]) return false;
    return true;
}

std::pair<int, int> box_to_edge(const Partition& lambda, int n, int row, int col) {
    if (row < 1 || row > lambda.length() || col < 1 || col > lambda.part(row) + 1)
        throw std::invalid_argument("box (" + std::to_string(row) + "," + std::to_string(col) +
                                    ") is outside the augmented diagram");
    if (col == 1) return {row, n + 1};
    return {row, n + 2 - col};
}

RegularSubgraph face_from_boxes(const Partition& lambda, int n, const FaceDescriptor& c) {
    check_admissible(lambda, n);
    if (static_cast<int>(c.row_masks.size()) != lambda.length())
        throw std::invalid_argument("face descriptor must have one mask per row");
    std::set<std::pair<int, int>> chosen;
    for (int i = 1; i <= lambda.length(); ++i) {
        const std::uint32_t mask = c.row_masks[i - 1];
        const std::uint32_t full = (1u << (lambda.part(i) + 1)) - 1;
        if (mask == 0)
            throw std::invalid_argument("face descriptor row " + std::to_string(i) +
                                        " has no box");
        if (mask & ~full)
            throw std::invalid_argument("face descriptor row " + std::to_string(i) +
                                        " has boxes outside the diagram");
        for (int j = 1; j <= lambda.part(i) + 1; ++j)
            if (mask >> (j - 1) & 1) chosen.insert(box_to_edge(lambda, n, i, j));
    }
    for (int i = lambda.length() + 1; i <= n; ++i) chosen.insert({i, n + 1});
    // canonical order: walk E(G) and keep the chosen ones
    RegularSubgraph h;
    const FlowGraph g = build_graph(lambda, n);
    for (const auto& e : g.edges)
        if (chosen.count(e)) h.edges.push_back(e);
    return h;
}

std::vector<Int> f_vector(const Partition& lambda) {
    const int dim = lambda.size();
    std::vector<Int> f(dim + 1, Int(0));
    // distribute a face dimension d_i in 0..lambda_i to each simplex factor
    std::vector<int> d(lambda.length(), 0);
    while (true) {
        Int c = 1;
        int dsum = 0;
        for (int i = 0; i < lambda.length(); ++i) {
            c *= binomial(Int(lambda.parts[i] + 1), Int(d[i] + 1));
            dsum += d[i];
        }
        f[dsum] += c;
        int k = lambda.length() - 1;
        while (k >= 0 && d[k] == lambda.parts[k]) d[k--] = 0;
        if (k < 0) break;
        ++d[k];
    }
    return f;
}

int face_dimension(const FlowGraph& g, const Partition& lambda, const NetflowVector& a,
                   const FaceDescriptor& c) {
    const int n = g.n();
    const RegularSubgraph h = face_from_boxes(lambda, n, c);
    // out-edges per vertex within the face
    std::vector<std::vector<int>> outs(g.vertex_count + 1);
    for (const auto& [p, q] : h.edges) outs[p].push_back(g.edge_index(p, q));
    // tree flows of every spanning choice inside the face = vertices of the face
    std::vector<std::vector<Rat>> points;
    std::vector<int> idx(n, 0);
    while (true) {
        SpanningChoice choice;
        choice.edge_for_vertex.resize(n);
        for (int v = 1; v <= n; ++v) choice.edge_for_vertex[v - 1] = outs[v][idx[v - 1]];
        const Flow f = tree_flow(g, a, choice);
        // sink columns are affinely dependent on the Y-edge columns; rank on
        // the Y-edge coordinates only
        std::vector<Rat> ycoords;
        for (int k = 0; k < g.edge_count(); ++k)
            if (g.edges[k].second != g.vertex_count) ycoords.push_back(f.values[k]);
        points.push_back(std::move(ycoords));
        int v = n - 1;
        while (v >= 0 && idx[v] + 1 == static_cast<int>(outs[v + 1].size())) idx[v--] = 0;
        if (v < 0) break;
        ++idx[v];
    }
    return affine_rank(points);
}

std::vector<FaceInfo> enumerate_faces(const Partition& lambda, int n, const NetflowVector& a) {
    check_admissible(lambda, n);
    if (a.length() != n) throw std::invalid_argument("netflow length does not match n");
    if (total_face_count(lambda) > Int(1) << 20)
        throw std::invalid_argument("face poset too large to enumerate (over 2^20 faces)");
    const FlowGraph g = build_graph(lambda, n);
    std::vector<FaceInfo> faces;
    std::vector<std::uint32_t> masks(lambda.length(), 1);
    while (true) {
        FaceDescriptor c{masks};
        faces.push_back({c, face_dimension(g, lambda, a, c)});
        int i = lambda.length() - 1;
        while (i >= 0 && masks[i] == (1u << (lambda.parts[i] + 1)) - 1) masks[i--] = 1;
        if (i < 0) break;
        ++masks[i];
    }
    return faces;
}

std::vector<Int> f_vector_from_poset(const Partition& lambda, int n, const NetflowVector& a) {
    std::vector<Int> f(lambda.size() + 1, Int(0));
    for (const FaceInfo& face : enumerate_faces(lambda, n, a)) {
        if (face.dimension > lambda.size()) throw internal_error("face dimension exceeds |lambda|");
        f[face.dimension] += 1;
    }
    return f;
}

Polynomial h_polynomial(const Partition& lambda) {
    Polynomial h = Polynomial::constant(Rat(1));
    for (int p : lambda.parts) {
        std::vector<Rat> ones(static_cast<std::size_t>(p) + 1, Rat(1));
        h = h * Polynomial(std::move(ones));
    }
    return h;
}

Polynomial h_from_f_vector(const std::vector<Int>& f) {
    Polynomial result;
    Polynomial xminus1({Rat(-1), Rat(1)});
    Polynomial power = Polynomial::constant(Rat(1));
    for (std::size_t d = 0; d < f.size(); ++d) {
        result = result + power.scaled(Rat(f[d]));
        power = power * xminus1;
    }
    return result;
}

Int total_face_count(const Partition& lambda) {
    Int total = 1;
    for (int p : lambda.parts) total *= pow_int(Int(2), static_cast<unsigned long>(p) + 1) - 1;
    return total;
}

std::string face_mask_hex(const Partition& lambda, const FaceDescriptor& c) {
    if (static_cast<int>(c.row_masks.size()) != lambda.length())
        throw std::invalid_argument("face descriptor must have one mask per row");
    Int packed = 0;
    int shift = 0;
    for (int i = 0; i < lambda.length(); ++i) {
        packed += Int(c.row_masks[i]) << shift;
        shift += lambda.parts[i] + 1;
    }
    return packed.get_str(16);
}

}  // namespace flowpoly
