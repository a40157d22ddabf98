#include "doctest.h"

#include "flowpoly/closed_forms.hpp"
#include "flowpoly/ct_identity.hpp"
#include "flowpoly/kostant.hpp"
#include "flowpoly/lidskii.hpp"
#include "oracles.hpp"

using namespace flowpoly;
using flowpoly::testing::netflow_pattern;
using flowpoly::testing::partitions_up_to;

TEST_CASE("truncated Laurent series basics") {
    TruncatedLaurentSeries s(2, 5);
    s.add_term({1, -1}, Rat(3));
    s.add_term({0, 0}, Rat(2));
    s.add_term({1, -1}, Rat(-3));  // cancels
    CHECK(s.term_count() == 1);
    CHECK(s.constant_term() == 2);
    CHECK(s.coefficient({1, -1}) == 0);
    CHECK_THROWS_AS(s.add_term({6, 0}, Rat(1)), std::invalid_argument);

    // product truncation drops exponents outside the window
    TruncatedLaurentSeries x(1, 2), y(1, 2);
    x.add_term({2}, Rat(1));
    y.add_term({1}, Rat(1));
    y.add_term({-1}, Rat(5));
    const TruncatedLaurentSeries p = x.multiplied_by(y);
    CHECK(p.coefficient({1}) == 5);
    CHECK(p.coefficient({3}) == 0);
}

TEST_CASE("series constant terms for hand-expanded cases") {
    CHECK(ct_lhs_series(Partition::parse("1"), 2, NetflowVector({Int(2), Int(5)})) == 2);
    CHECK(ct_lhs_series(Partition::parse("1,1"), 3, NetflowVector::ones(3)) == 2);
    CHECK(ct_lhs_series(Partition::parse("2"), 3, NetflowVector({Int(3), Int(1), Int(1)})) == 9);
}

TEST_CASE("below the limiting index the constant term is the polytope volume") {
    // lambda=(2,1), n=3 < lambda_1+l(lambda): the CT gives vol F_{K4}(1) = 4,
    // not the limiting volume 3, which is why ct_identity_check requires the
    // limiting index.
    const Partition lambda = Partition::parse("2,1");
    const NetflowVector a = NetflowVector::ones(3);
    CHECK(ct_lhs_series(lambda, 3, a) == 4);
    CHECK(ct_lhs_lidskii(lambda, 3, a) == 4);
    CHECK(lidskii_volume(build_graph(lambda, 3), a) == 4);
    CHECK(limiting_volume(lambda, a) == 3);
    CHECK_THROWS_AS(ct_identity_check(lambda, 3, a), std::invalid_argument);
}

TEST_CASE("lidskii route of the constant-term proof") {
    CHECK(ct_lhs_lidskii(Partition::parse("4,3,2,1"), 8, NetflowVector::ones(8)) == 12600);
    CHECK(ct_lhs_lidskii(Partition::parse("1"), 2, NetflowVector({Int(3), Int(1)})) == 3);
    CHECK(ct_lhs_lidskii(Partition::parse("2,1"), 4, NetflowVector::ones(4)) == 3);
}

TEST_CASE("identity check at the limiting index") {
    CHECK(ct_identity_check(Partition::parse("1"), 2, NetflowVector({Int(1), Int(1)})));
    CHECK(ct_identity_check(Partition::parse("2,1"), 4, NetflowVector::ones(4)));
    CHECK(ct_lhs_series(Partition::parse("2,1"), 4, NetflowVector::ones(4)) == 3);
    SUBCASE("mixed netflow") {
        const NetflowVector a({Int(2), Int(3), Int(1), Int(1)});
        CHECK(ct_identity_check(Partition::parse("1,1"), 4, a));
        CHECK(ct_lhs_series(Partition::parse("1,1"), 4, a) == 12);
        CHECK(limiting_volume(Partition::parse("1,1"), a) == 12);
    }
}

TEST_CASE("truncation behavior") {
    const Partition lambda = Partition::parse("2,1");
    const NetflowVector a = NetflowVector::ones(4);
    SUBCASE("doubling the default bound never changes the value") {
        const int d = default_truncation_bound(lambda);
        CHECK(ct_series_value(lambda, 4, a, d) == ct_series_value(lambda, 4, a, 2 * d));
        CHECK(ct_lhs_series(lambda, 4, a, d) == ct_lhs_series(lambda, 4, a, 2 * d));
    }
    SUBCASE("an undersized bound is caught by the sentinel") {
        CHECK_THROWS_AS(ct_lhs_series(lambda, 4, a, 1), std::invalid_argument);
    }
}

TEST_CASE("pruned and unpruned products agree") {
    for (const auto& [text, n] : std::vector<std::pair<const char*, int>>{
             {"1", 2}, {"1,1", 3}, {"2", 3}}) {
        const Partition lambda = Partition::parse(text);
        const NetflowVector a = netflow_pattern(n, 2);
        const int d = default_truncation_bound(lambda);
        CHECK(ct_series_value(lambda, n, a, d, true) == ct_series_value(lambda, n, a, d, false));
    }
}

TEST_CASE("products associate in any order") {
    const int vars = 3, bound = 6;
    std::vector<TruncatedLaurentSeries> factors = {
        linear_power(vars, bound, {Int(1), Int(2), Int(1)}, 2),
        vandermonde_inverse_factor(vars, bound, 1, 2),
        vandermonde_inverse_factor(vars, bound, 1, 3),
        vandermonde_inverse_factor(vars, bound, 2, 3),
    };
    TruncatedLaurentSeries left = factors[0];
    for (std::size_t k = 1; k < factors.size(); ++k) left = left.multiplied_by(factors[k]);
    TruncatedLaurentSeries right = factors.back();
    for (std::size_t k = factors.size() - 1; k-- > 0;) right = right.multiplied_by(factors[k]);
    CHECK(left.constant_term() == right.constant_term());
}

TEST_CASE("series engine reproduces Kostant counts through the generating function") {
    // [x^b] prod (1 - x_j/x_i)^{-1} counts with the reversed roots, so it
    // must equal K_G(-b).
    FlowGraph tri;
    tri.vertex_count = 3;
    tri.edges = {{1, 2}, {1, 3}, {2, 3}};
    FlowGraph path;
    path.vertex_count = 3;
    path.edges = {{1, 2}, {2, 3}};
    for (const FlowGraph& g : {tri, path}) {
        for (const std::vector<int>& b : std::vector<std::vector<int>>{
                 {-1, -1, 2}, {0, 0, 0}, {-2, 1, 1}, {-1, 0, 1}, {-3, 1, 2}, {1, 0, -1}}) {
            std::vector<Int> neg;
            for (int x : b) neg.emplace_back(-x);
            CHECK(kostant_series_coefficient(g, b, 8) == kostant_count(g, {neg}));
        }
    }
}

TEST_CASE("triple equality across the sweep") {
    for (const Partition& lambda : partitions_up_to(3)) {
        for (int n = minimal_admissible_index(lambda); n <= 5; ++n) {
            for (int pattern : {0, 2}) {
                const NetflowVector a = netflow_pattern(n, pattern);
                const Int series = ct_lhs_series(lambda, n, a);
                CHECK(series == ct_lhs_lidskii(lambda, n, a));
                if (n >= limiting_index(lambda)) CHECK(series == limiting_volume(lambda, a));
            }
        }
    }
}
