#pragma once

// Face structure of F_{G(lambda,n)}(a). Nonempty faces correspond to regular
// subgraphs, which in turn correspond to box subsets of the augmented Young
// diagram Y(lambda_1+1, ..., lambda_k+1) covering every row; the whole face
// lattice is that of a product of simplices.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "flowpoly/exact.hpp"
#include "flowpoly/partition_graph.hpp"

namespace flowpoly {

// Box subset of the augmented diagram, one bitmask per row: bit j-1 set means
// box (i, j) is chosen, 1 <= j <= lambda_i + 1. Every row mask must be
// nonzero for the subset to describe a nonempty face.
struct FaceDescriptor {
    std::vector<std::uint32_t> row_masks;
};

struct RegularSubgraph {
    std::vector<std::pair<int, int>> edges;  // subset of E(G) in canonical order
};

// True iff every non-sink vertex keeps an outgoing edge in the subset.
// Throws if the subset is not contained in E(G).
bool is_regular(const FlowGraph& g, const std::vector<std::pair<int, int>>& subset,
                const NetflowVector& a);

// Box (i, j) of the augmented diagram -> edge: column 1 is the sink edge
// (i, n+1), columns 2..lambda_i+1 are the Y-edges (i, n+2-j).
std::pair<int, int> box_to_edge(const Partition& lambda, int n, int row, int col);

// The regular subgraph of the box subset: its edges plus the sink edges of
// the vertices beyond l(lambda). Throws if some row has no box.
RegularSubgraph face_from_boxes(const Partition& lambda, int n, const FaceDescriptor& c);

// Face counts by dimension of the product of simplices
// Delta_{lambda_1} x ... x Delta_{lambda_k}, d = 0 .. |lambda|.
std::vector<Int> f_vector(const Partition& lambda);

// Dimension of one face, as the affine rank of the tree flows it contains.
int face_dimension(const FlowGraph& g, const Partition& lambda, const NetflowVector& a,
                   const FaceDescriptor& c);

struct FaceInfo {
    FaceDescriptor boxes;
    int dimension;
};

// Every nonempty face, dimensions computed by exact rank. Throws
// std::invalid_argument when the poset exceeds 2^20 faces.
std::vector<FaceInfo> enumerate_faces(const Partition& lambda, int n, const NetflowVector& a);

// The f-vector recovered from the regular-subgraph poset; must match
// f_vector(lambda) for every admissible n.
std::vector<Int> f_vector_from_poset(const Partition& lambda, int n, const NetflowVector& a);

// prod_i (1 + x + ... + x^{lambda_i}); palindromic, h(1) = vertex count.
Polynomial h_polynomial(const Partition& lambda);

// sum_d f_d (x-1)^d; equals h_polynomial for these simple polytopes.
Polynomial h_from_f_vector(const std::vector<Int>& f);

// prod_i (2^{lambda_i+1} - 1): nonempty box choices per row.
Int total_face_count(const Partition& lambda);

// Row masks packed little-endian into one integer, as lowercase hex.
std::string face_mask_hex(const Partition& lambda, const FaceDescriptor& c);

}  // namespace flowpoly
