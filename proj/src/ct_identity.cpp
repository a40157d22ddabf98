#include "flowpoly/ct_identity.hpp"

#include <algorithm>

#include "flowpoly/closed_forms.hpp"
#include "flowpoly/kostant.hpp"
#include "flowpoly/lidskii.hpp"

namespace flowpoly {

TruncatedLaurentSeries::TruncatedLaurentSeries(int var_count, int bound)
    : vars_(var_count), bound_(bound) {
    if (var_count < 1) throw std::invalid_argument("series needs at least one variable");
    if (bound < 1) throw std::invalid_argument("truncation bound must be positive");
}

TruncatedLaurentSeries TruncatedLaurentSeries::constant(int var_count, int bound, const Rat& c) {
    TruncatedLaurentSeries s(var_count, bound);
    if (sgn(c) != 0) s.terms_.emplace(ExponentVector(var_count, 0), c);
    return s;
}

void TruncatedLaurentSeries::add_term(const ExponentVector& exps, const Rat& c) {
    if (static_cast<int>(exps.size()) != vars_)
        throw std::invalid_argument("exponent vector length does not match variable count");
    for (int e : exps)
        if (e < -bound_ || e > bound_)
            throw std::invalid_argument("exponent outside the truncation window");
    Rat& slot = terms_[exps];
    slot += c;
    if (sgn(slot) == 0) terms_.erase(exps);
}

Rat TruncatedLaurentSeries::coefficient(const ExponentVector& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat TruncatedLaurentSeries::constant_term() const {
    return coefficient(ExponentVector(vars_, 0));
}

TruncatedLaurentSeries TruncatedLaurentSeries::multiplied_by(const TruncatedLaurentSeries& o,
                                                             const KeepPredicate& keep) const {
    if (o.vars_ != vars_) throw std::invalid_argument("variable counts differ");
    TruncatedLaurentSeries out(vars_, bound_);
    ExponentVector e(vars_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            bool in_window = true;
            for (int v = 0; v < vars_; ++v) {
                e[v] = e1[v] + e2[v];
                if (e[v] < -bound_ || e[v] > bound_) {
                    in_window = false;
                    break;
                }
            }
            if (!in_window) continue;
            if (keep && !keep(e)) continue;
            Rat& slot = out.terms_[e];
            slot += c1 * c2;
            if (sgn(slot) == 0) out.terms_.erase(e);
        }
    }
    return out;
}

TruncatedLaurentSeries vandermonde_inverse_factor(int vars, int bound, int i, int j) {
    TruncatedLaurentSeries s(vars, bound);
    for (int k = 0; k + 1 <= bound; ++k) {
        TruncatedLaurentSeries::ExponentVector e(vars, 0);
        e[j - 1] += k;
        e[i - 1] -= k + 1;
        s.add_term(e, Rat(1));
    }
    return s;
}

TruncatedLaurentSeries kostant_gs_factor(int vars, int bound, int i, int j) {
    TruncatedLaurentSeries s(vars, bound);
    for (int k = 0; k <= bound; ++k) {
        TruncatedLaurentSeries::ExponentVector e(vars, 0);
        e[j - 1] += k;
        e[i - 1] -= k;
        s.add_term(e, Rat(1));
    }
    return s;
}

TruncatedLaurentSeries linear_power(int vars, int bound, const std::vector<Int>& coeffs,
                                    int power) {
    if (static_cast<int>(coeffs.size()) != vars)
        throw std::invalid_argument("coefficient count does not match variable count");
    TruncatedLaurentSeries s(vars, bound);
    if (power == 0) return TruncatedLaurentSeries::constant(vars, bound, Rat(1));
    const Int total(power);
    for (const WeakComposition& comp : CompositionRange(power, vars)) {
        Int c = multinomial(total, std::vector<Int>(comp.begin(), comp.end()));
        bool zero = false;
        for (int v = 0; v < vars; ++v) {
            if (comp[v] == 0) continue;
            if (sgn(coeffs[v]) == 0) {
                zero = true;
                break;
            }
            c *= pow_int(coeffs[v], comp[v]);
        }
        if (zero || sgn(c) == 0) continue;
        s.add_term(TruncatedLaurentSeries::ExponentVector(comp.begin(), comp.end()), Rat(c));
    }
    return s;
}

Rat product_coefficient(const std::vector<TruncatedLaurentSeries>& factors,
                        const std::vector<int>& target, bool pruned) {
    if (factors.empty()) throw std::invalid_argument("empty factor list");
    const int vars = factors[0].var_count();
    // per-factor exponent ranges, then suffix sums of what the remaining
    // factors can still add
    const std::size_t m = factors.size();
    std::vector<std::vector<int>> lo(m, std::vector<int>(vars, 0));
    std::vector<std::vector<int>> hi(m, std::vector<int>(vars, 0));
    for (std::size_t k = 0; k < m; ++k) {
        bool first = true;
        for (const auto& [e, c] : factors[k].terms()) {
            for (int v = 0; v < vars; ++v) {
                if (first) {
                    lo[k][v] = hi[k][v] = e[v];
                } else {
                    lo[k][v] = std::min(lo[k][v], e[v]);
                    hi[k][v] = std::max(hi[k][v], e[v]);
                }
            }
            first = false;
        }
    }
    std::vector<std::vector<int>> suffix_lo(m + 1, std::vector<int>(vars, 0));
    std::vector<std::vector<int>> suffix_hi(m + 1, std::vector<int>(vars, 0));
    for (std::size_t k = m; k-- > 0;)
        for (int v = 0; v < vars; ++v) {
            suffix_lo[k][v] = suffix_lo[k + 1][v] + lo[k][v];
            suffix_hi[k][v] = suffix_hi[k + 1][v] + hi[k][v];
        }

    TruncatedLaurentSeries acc = factors[0];
    if (pruned) {
        TruncatedLaurentSeries pruned_acc(acc.var_count(), acc.bound());
        for (const auto& [e, c] : acc.terms()) {
            bool reachable = true;
            for (int v = 0; v < vars; ++v)
                if (e[v] + suffix_hi[1][v] < target[v] || e[v] + suffix_lo[1][v] > target[v]) {
                    reachable = false;
                    break;
                }
            if (reachable) pruned_acc.add_term(e, c);
        }
        acc = pruned_acc;
    }
    for (std::size_t k = 1; k < m; ++k) {
        TruncatedLaurentSeries::KeepPredicate keep = nullptr;
        if (pruned) {
            const std::vector<int>& slo = suffix_lo[k + 1];
            const std::vector<int>& shi = suffix_hi[k + 1];
            keep = [&target, &slo, &shi, vars](const std::vector<int>& e) {
                for (int v = 0; v < vars; ++v)
                    if (e[v] + shi[v] < target[v] || e[v] + slo[v] > target[v]) return false;
                return true;
            };
        }
        acc = acc.multiplied_by(factors[k], keep);
    }
    return acc.coefficient(target);
}

int default_truncation_bound(const Partition& lambda) {
    return lambda.size() + lambda.parts[0] + 2;
}

Int ct_series_value(const Partition& lambda, int n, const NetflowVector& a, int bound,
                    bool pruned) {
    check_admissible(lambda, n);
    if (a.length() < n) throw std::invalid_argument("netflow needs n entries");
    const int L = lambda.size();
    std::vector<Int> coeffs(a.entries.begin(), a.entries.begin() + n);
    std::vector<TruncatedLaurentSeries> factors;
    factors.push_back(linear_power(n, bound, coeffs, L));
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = n + 1 - lambda.part(i); j <= n; ++j)
            factors.push_back(vandermonde_inverse_factor(n, bound, i, j));
    const Rat ct = product_coefficient(factors, std::vector<int>(n, 0), pruned);
    if (ct.get_den() != 1) throw internal_error("constant term is not an integer");
    return ct.get_num();
}

Int ct_lhs_series(const Partition& lambda, int n, const NetflowVector& a, int bound) {
    if (bound <= 0) bound = default_truncation_bound(lambda);
    const Int at_bound = ct_series_value(lambda, n, a, bound);
    const Int doubled = ct_series_value(lambda, n, a, 2 * bound);
    if (at_bound != doubled)
        throw std::invalid_argument("truncation bound " + std::to_string(bound) +
                                    " too small: doubling it changes the constant term");
    return at_bound;
}

Int ct_lhs_lidskii(const Partition& lambda, int n, const NetflowVector& a) {
    check_admissible(lambda, n);
    if (a.length() < n) throw std::invalid_argument("netflow needs n entries");
    const int L = lambda.size();
    const FlowGraph sources = restrict_to_sources(build_graph(lambda, n));
    std::vector<int> lambda_bar(n, 0);
    for (int i = 1; i <= lambda.length(); ++i) lambda_bar[i - 1] = lambda.part(i);
    KostantEvaluator eval(sources);
    std::vector<long long> b(n);
    const Int total(L);
    Int sum = 0;
    for (const WeakComposition& comp : CompositionRange(L, n)) {
        for (int j = 0; j < n; ++j) b[j] = comp[j] - lambda_bar[j];
        const Int k = eval.count(b);
        if (sgn(k) == 0) continue;
        Int term = k * multinomial(total, std::vector<Int>(comp.begin(), comp.end()));
        for (int j = 0; j < n; ++j)
            if (comp[j] > 0) term *= pow_int(a.at(j + 1), comp[j]);
        sum += term;
    }
    return sum;
}

bool ct_identity_check(const Partition& lambda, int n, const NetflowVector& a, int bound) {
    if (n < limiting_index(lambda))
        throw std::invalid_argument(
            "ct_identity_check needs n >= lambda_1 + l(lambda) = " +
            std::to_string(limiting_index(lambda)) +
            " (below it the left-hand side is the volume of F_{G(lambda,n)}, not the limiting "
            "volume)");
    const Int series = ct_lhs_series(lambda, n, a, bound);
    const Int lidskii = ct_lhs_lidskii(lambda, n, a);
    const Int closed = limiting_volume(lambda, a);
    return series == lidskii && lidskii == closed;
}

Int kostant_series_coefficient(const FlowGraph& g, const std::vector<int>& b, int bound) {
    if (static_cast<int>(b.size()) != g.vertex_count)
        throw std::invalid_argument("target length does not match vertex count");
    std::vector<TruncatedLaurentSeries> factors;
    factors.reserve(g.edges.size() + 1);
    factors.push_back(TruncatedLaurentSeries::constant(g.vertex_count, bound, Rat(1)));
    for (const auto& [i, j] : g.edges)
        factors.push_back(kostant_gs_factor(g.vertex_count, bound, i, j));
    const Rat c = product_coefficient(factors, b, true);
    if (c.get_den() != 1) throw internal_error("series coefficient is not an integer");
    return c.get_num();
}

}  // namespace flowpoly
