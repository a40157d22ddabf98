#include "flowpoly/lidskii.hpp"

#include <algorithm>
#include <thread>

#include "flowpoly/kostant.hpp"

namespace flowpoly {

CompositionRange::CompositionRange(int total, int length) : total_(total), length_(length) {
    if (total < 0) throw std::invalid_argument("composition total must be nonnegative");
    if (length < 1) throw std::invalid_argument("composition length must be positive");
}

CompositionRange::iterator::iterator(int total, int length) : done_(false) {
    current_.assign(length, 0);
    current_[0] = total;
}

CompositionRange::iterator& CompositionRange::iterator::operator++() {
    // Find the rightmost position before the last with something to move;
    // push one unit right and collapse everything after it.
    const int len = static_cast<int>(current_.size());
    int i = len - 2;
    while (i >= 0 && current_[i] == 0) --i;
    if (i < 0) {
        done_ = true;
        return *this;
    }
    const int tail = current_[len - 1];
    current_[len - 1] = 0;
    current_[i] -= 1;
    current_[i + 1] = tail + 1;
    for (int k = i + 2; k < len; ++k) {
        current_[i + 1] += current_[k];
        current_[k] = 0;
    }
    return *this;
}

Int CompositionRange::count() const {
    return binomial(Int(total_ + length_ - 1), Int(length_ - 1));
}

namespace {

enum class LidskiiKind { Volume, Points };

Int lidskii_sum(const FlowGraph& g, const NetflowVector& a, LidskiiKind kind, int threads) {
    if (a.length() != g.n()) throw std::invalid_argument("netflow length does not match graph");
    const int n = g.n();
    const int total = g.edge_count() - n;
    if (total < 0) throw std::invalid_argument("graph has fewer edges than non-sink vertices");
    const std::vector<int> t = outdegree_shift(g);
    const FlowGraph sources = restrict_to_sources(g);
    const Int total_int(total);

    auto worker_sum = [&](int worker, int stride) {
        KostantEvaluator eval(sources);
        std::vector<long long> b(n);
        Int sum = 0;
        long long index = 0;
        for (const WeakComposition& comp : CompositionRange(total, n)) {
            if (index++ % stride != worker) continue;
            for (int j = 0; j < n; ++j) b[j] = comp[j] - t[j];
            const Int k = eval.count(b);
            if (sgn(k) == 0) continue;
            Int term = k;
            if (kind == LidskiiKind::Volume) {
                std::vector<Int> parts(comp.begin(), comp.end());
                term *= multinomial(total_int, parts);
                for (int j = 0; j < n; ++j)
                    if (comp[j] > 0) term *= pow_int(a.at(j + 1), comp[j]);
            } else {
                for (int j = 0; j < n; ++j) term *= binomial(a.at(j + 1) + t[j], Int(comp[j]));
            }
            sum += term;
        }
        return sum;
    };

    if (threads <= 1) return worker_sum(0, 1);

    std::vector<Int> partial(threads, Int(0));
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int w = 0; w < threads; ++w)
        pool.emplace_back([&, w] { partial[w] = worker_sum(w, threads); });
    for (auto& th : pool) th.join();
    Int sum = 0;
    for (const Int& p : partial) sum += p;
    return sum;
}

}  // namespace

Int lidskii_volume(const FlowGraph& g, const NetflowVector& a, int threads) {
    return lidskii_sum(g, a, LidskiiKind::Volume, threads);
}

Int lidskii_points(const FlowGraph& g, const NetflowVector& a, int threads) {
    return lidskii_sum(g, a, LidskiiKind::Points, threads);
}

}  // namespace flowpoly
