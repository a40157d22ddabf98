#pragma once

// Closed-form product formulas: the limiting-polytope volume, both printed
// forms of the Tesler polytope volume, the ratio identity tying them
// together, and the Ehrhart polynomial of a product of scaled simplices.

#include <vector>

#include "flowpoly/exact.hpp"
#include "flowpoly/partition_graph.hpp"

namespace flowpoly {

// |lambda|! * prod a_i^{lambda_i} / lambda_i!, computed as
// multinomial(|lambda|, lambda) * prod a_i^{lambda_i} to stay in integers.
// Only the first l(lambda) netflow entries matter; a must supply at least
// that many.
Int limiting_volume(const Partition& lambda, const NetflowVector& a);

// binom(n,2)! * 2^binom(n,2) / prod_{i<=n} i!.
Int tesler_volume(int n);

// Number of standard Young tableaux of shape lambda (hook length formula).
Int syt_count(const Partition& lambda);

// |SYT_{(n-1,...,1)}| * prod_{i=0}^{n-1} C_i; equals tesler_volume(n).
Int tesler_volume_catalan_form(int n);

// tesler_volume(n) * n! == 2^binom(n,2) * limiting_volume((n-1,...,1), 1).
bool corollary_ratio_check(int n);

// prod_{i<=l} binom(a_i*t + lambda_i, lambda_i) as a polynomial in t: the
// Ehrhart polynomial of a_1*Delta_{lambda_1} x ... x a_l*Delta_{lambda_l}.
Polynomial product_ehrhart(const Partition& lambda, const NetflowVector& a);

}  // namespace flowpoly
