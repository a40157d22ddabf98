#pragma once

// Constant-term verification of the limiting-volume identity: a truncated
// multivariate Laurent series engine extracts
//   CT_{x_n} ... CT_{x_1} (a_1 x_1 + ... + a_n x_n)^L  prod (x_i - x_j)^{-1},
// each inverse factor expanded in the region |x_j| << |x_i|, and the same
// value is recomputed through the Lidskii sum from the identity's proof.

#include <functional>
#include <map>
#include <vector>

#include "flowpoly/exact.hpp"
#include "flowpoly/partition_graph.hpp"

namespace flowpoly {

// Finitely many monomials in x_1..x_vars with every exponent in [-bound, bound];
// products silently drop monomials that leave the window (the doubling
// sentinel in ct_lhs_series guards against a window that was too small).
// Immutable value semantics: products may be associated in any order.
class TruncatedLaurentSeries {
public:
    using ExponentVector = std::vector<int>;
    using KeepPredicate = std::function<bool(const ExponentVector&)>;

    TruncatedLaurentSeries(int var_count, int bound);
    static TruncatedLaurentSeries constant(int var_count, int bound, const Rat& c);

    int var_count() const { return vars_; }
    int bound() const { return bound_; }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<ExponentVector, Rat>& terms() const { return terms_; }

    void add_term(const ExponentVector& exps, const Rat& c);
    Rat coefficient(const ExponentVector& exps) const;
    Rat constant_term() const;

    // Truncating product; `keep`, when given, discards result monomials early
    // (degree-reachability pruning).
    TruncatedLaurentSeries multiplied_by(const TruncatedLaurentSeries& o,
                                         const KeepPredicate& keep = nullptr) const;

private:
    int vars_, bound_;
    std::map<ExponentVector, Rat> terms_;
};

// (x_i - x_j)^{-1} = sum_{k>=0} x_j^k x_i^{-k-1}, truncated. 1-based i, j.
TruncatedLaurentSeries vandermonde_inverse_factor(int vars, int bound, int i, int j);

// (1 - x_j x_i^{-1})^{-1} = sum_{k>=0} x_j^k x_i^{-k}, truncated.
TruncatedLaurentSeries kostant_gs_factor(int vars, int bound, int i, int j);

// (sum_i coeffs[i] x_i)^power via the multinomial theorem.
TruncatedLaurentSeries linear_power(int vars, int bound, const std::vector<Int>& coeffs,
                                    int power);

// Multiply the factors left to right and return the coefficient at `target`.
// When pruned, monomials whose exponents cannot reach `target` through the
// remaining factors are discarded immediately.
Rat product_coefficient(const std::vector<TruncatedLaurentSeries>& factors,
                        const std::vector<int>& target, bool pruned = true);

// Raw series evaluation at one truncation bound (no sentinel).
Int ct_series_value(const Partition& lambda, int n, const NetflowVector& a, int bound,
                    bool pruned = true);

int default_truncation_bound(const Partition& lambda);

// Series CT with the doubling sentinel: the value is computed at `bound`
// (default L + lambda_1 + 2) and at 2*bound, and must agree.
Int ct_lhs_series(const Partition& lambda, int n, const NetflowVector& a, int bound = 0);

// The Lidskii sum from the identity's proof: sum over compositions i of L
// of multinomial(L; i) prod a^i K_G(i - lambda_bar), with G the restriction
// of G(lambda, n) to [n]. Equals the series CT for every admissible n.
Int ct_lhs_lidskii(const Partition& lambda, int n, const NetflowVector& a);

// True iff series CT = Lidskii sum = limiting volume. Requires
// n >= lambda_1 + l(lambda); below that index both left-hand routes still
// agree with each other but give the volume of F_{G(lambda,n)}(a), not the
// limiting one.
bool ct_identity_check(const Partition& lambda, int n, const NetflowVector& a, int bound = 0);

// [x^b] prod_{(i,j) in E(G)} (1 - x_j x_i^{-1})^{-1}: the Kostant generating
// series of the edge-reversed graph, equal to K_G(-b). Small-case cross-check
// for the series engine.
Int kostant_series_coefficient(const FlowGraph& g, const std::vector<int>& b, int bound);

}  // namespace flowpoly
