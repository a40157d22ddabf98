#pragma once

// Baldoni-Vergne Lidskii expansions: the normalized volume and the lattice
// point count of F_G(a') as sums over weak compositions of N-n, weighted by
// Kostant values of the graph restricted to the sources.

#include <iterator>
#include <vector>

#include "flowpoly/exact.hpp"
#include "flowpoly/partition_graph.hpp"

namespace flowpoly {

using WeakComposition = std::vector<int>;

// Weak compositions of `total` into `length` parts, lexicographically
// descending: (total, 0, ..., 0) first, (0, ..., 0, total) last.
class CompositionRange {
public:
    CompositionRange(int total, int length);

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = WeakComposition;
        using difference_type = std::ptrdiff_t;
        using pointer = const WeakComposition*;
        using reference = const WeakComposition&;

        iterator() = default;
        iterator(int total, int length);

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        bool operator==(const iterator& o) const { return done_ == o.done_ && (done_ || current_ == o.current_); }
        bool operator!=(const iterator& o) const { return !(*this == o); }

    private:
        WeakComposition current_;
        bool done_ = true;
    };

    iterator begin() const { return iterator(total_, length_); }
    iterator end() const { return iterator(); }
    Int count() const;  // C(total+length-1, length-1)

private:
    int total_, length_;
};

// Normalized volume of F_G(a') by the Lidskii volume formula. Strictly
// positive netflow and an out-edge at every non-sink vertex are required.
// The composition sum is split across `threads` workers, each with its own
// memoized Kostant evaluator; exact integer summation makes the result
// independent of the thread count.
Int lidskii_volume(const FlowGraph& g, const NetflowVector& a, int threads = 1);

// Lattice point count K_G(a') by the Lidskii point formula.
Int lidskii_points(const FlowGraph& g, const NetflowVector& a, int threads = 1);

}  // namespace flowpoly
