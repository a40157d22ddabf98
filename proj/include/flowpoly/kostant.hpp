#pragma once

// Kostant partition functions K_G(b): the number of nonnegative integer edge
// labelings with signed vertex totals b. Evaluated by a memoized DP over the
// DAG layering (all edges point forward): at each vertex the accumulated
// supply is distributed over its out-edges. Exponential in the worst case,
// comfortable at desk scale.

#include <unordered_map>
#include <vector>

#include "flowpoly/exact.hpp"
#include "flowpoly/partition_graph.hpp"

namespace flowpoly {

struct KostantTarget {
    std::vector<Int> b;  // length = vertex_count; K_G(b) = 0 unless sum(b) = 0
};

// Owns a per-graph memo cache keyed on (vertex, residual supplies of the
// not-yet-processed suffix), so the cache is shared across every target this
// evaluator sees. Distinct evaluators share no state.
class KostantEvaluator {
public:
    explicit KostantEvaluator(FlowGraph g);

    Int count(const KostantTarget& target);
    Int count(const std::vector<long long>& b);

    std::size_t memo_size() const { return memo_.size(); }

private:
    struct SuffixHash {
        std::size_t operator()(const std::vector<long long>& v) const;
    };

    Int distribute(int v, std::vector<long long>& residual);

    FlowGraph g_;
    std::vector<std::vector<int>> out_targets_;  // per vertex, ascending
    std::unordered_map<std::vector<long long>, Int, SuffixHash> memo_;
};

Int kostant_count(const FlowGraph& g, const KostantTarget& target);

// Lattice points of F_G(a) = K_G(a_1, ..., a_n, -sum a).
Int lattice_points(const FlowGraph& g, const NetflowVector& a);

// Lattice points of the dilations t*F_G(a) for t = 0..t_max.
std::vector<Int> ehrhart_values(const FlowGraph& g, const NetflowVector& a, int t_max);

// Interpolated from the values at t = 0..dim; an extra sample at dim+1 must
// agree with the interpolant or internal_error is thrown.
Polynomial ehrhart_polynomial(const FlowGraph& g, const NetflowVector& a);

}  // namespace flowpoly
