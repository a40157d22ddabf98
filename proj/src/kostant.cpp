#include "flowpoly/kostant.hpp"

#include <algorithm>

namespace flowpoly {

namespace {

constexpr long long kSupplyLimit = 1LL << 40;

long long to_supply(const Int& v) {
    if (!v.fits_slong_p() || std::abs(v.get_si()) > kSupplyLimit)
        throw std::overflow_error("netflow entry too large for the partition-function DP: " +
                                  v.get_str());
    return v.get_si();
}

}  // namespace

std::size_t KostantEvaluator::SuffixHash::operator()(const std::vector<long long>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (long long x : v) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

KostantEvaluator::KostantEvaluator(FlowGraph g) : g_(std::move(g)) {
    out_targets_.assign(g_.vertex_count + 1, {});
    for (const auto& [i, j] : g_.edges) {
        if (i >= j) throw std::invalid_argument("graph edges must point forward");
        out_targets_[i].push_back(j);
    }
    for (auto& t : out_targets_) std::sort(t.begin(), t.end());
}

Int KostantEvaluator::count(const KostantTarget& target) {
    if (static_cast<int>(target.b.size()) != g_.vertex_count)
        throw std::invalid_argument("target length does not match vertex count");
    Int sum = 0;
    for (const Int& v : target.b) sum += v;
    if (sgn(sum) != 0) return 0;
    std::vector<long long> b(target.b.size());
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = to_supply(target.b[i]);
    return count(b);
}

Int KostantEvaluator::count(const std::vector<long long>& b) {
    if (static_cast<int>(b.size()) != g_.vertex_count)
        throw std::invalid_argument("target length does not match vertex count");
    long long sum = 0;
    for (long long v : b) sum += v;
    if (sum != 0) return 0;
    std::vector<long long> residual(b);
    return distribute(1, residual);
}

// residual[v-1..] holds b_w plus inflow already routed to w for w >= v.
Int KostantEvaluator::distribute(int v, std::vector<long long>& residual) {
    if (v > g_.vertex_count) return 1;
    const long long supply = residual[v - 1];
    if (supply < 0) return 0;
    const auto& targets = out_targets_[v];
    if (targets.empty()) {
        if (supply != 0) return 0;
        return distribute(v + 1, residual);
    }

    std::vector<long long> key;
    key.reserve(g_.vertex_count - v + 2);
    key.push_back(v);
    key.insert(key.end(), residual.begin() + (v - 1), residual.end());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Int total = 0;
    // weak compositions of the supply over the out-edges
    auto rec = [&](auto&& self, std::size_t idx, long long remaining) -> void {
        if (idx + 1 == targets.size()) {
            residual[targets[idx] - 1] += remaining;
            total += distribute(v + 1, residual);
            residual[targets[idx] - 1] -= remaining;
            return;
        }
        for (long long take = 0; take <= remaining; ++take) {
            residual[targets[idx] - 1] += take;
            self(self, idx + 1, remaining - take);
            residual[targets[idx] - 1] -= take;
        }
    };
    rec(rec, 0, supply);

    memo_.emplace(std::move(key), total);
    return total;
}

Int kostant_count(const FlowGraph& g, const KostantTarget& target) {
    KostantEvaluator eval(g);
    return eval.count(target);
}

Int lattice_points(const FlowGraph& g, const NetflowVector& a) {
    if (a.length() != g.n()) throw std::invalid_argument("netflow length does not match graph");
    KostantTarget t;
    t.b = a.entries;
    t.b.push_back(-a.total());
    return kostant_count(g, t);
}

std::vector<Int> ehrhart_values(const FlowGraph& g, const NetflowVector& a, int t_max) {
    if (a.length() != g.n()) throw std::invalid_argument("netflow length does not match graph");
    if (t_max < 0) throw std::invalid_argument("t_max must be nonnegative");
    KostantEvaluator eval(g);
    std::vector<Int> out;
    out.reserve(t_max + 1);
    for (int t = 0; t <= t_max; ++t) {
        KostantTarget target;
        target.b.reserve(g.vertex_count);
        for (const Int& v : a.entries) target.b.push_back(t * v);
        target.b.push_back(Int(-t) * a.total());
        out.push_back(eval.count(target));
    }
    return out;
}

Polynomial ehrhart_polynomial(const FlowGraph& g, const NetflowVector& a) {
    const int dim = g.edge_count() - g.n();  // Y-edge count = dim of the polytope
    const std::vector<Int> values = ehrhart_values(g, a, dim + 1);
    std::vector<std::pair<Int, Int>> points;
    points.reserve(dim + 1);
    for (int t = 0; t <= dim; ++t) points.emplace_back(Int(t), values[t]);
    Polynomial p = interpolate(points);
    if (p.eval(Rat(dim + 1)) != Rat(values[dim + 1]))
        throw internal_error("Ehrhart interpolant disagrees with the count at t=" +
                             std::to_string(dim + 1));
    return p;
}

}  // namespace flowpoly
