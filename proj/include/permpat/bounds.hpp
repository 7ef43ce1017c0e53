// bounds.hpp
// Closed-form growth-rate bound calculators and the numeric inequalities
// behind them: the (sqrt(alpha)+sqrt(beta))^2 merge combination, the layered
// pattern bound in closed and recursive form, the partition-count bound
// p(k) < rho^sqrt(k) with rho = e^{pi sqrt(2/3)}, and the conditional bound
// for 1324 driven by pairs of partitions.
//
// Reals are long doubles; inequality checks against exact integers are done
// in log space, where the tested gaps dwarf the conversion error.
#pragma once

#include <string>

#include "permpat/count.hpp"
#include "permpat/perm.hpp"

namespace permpat {

struct BoundValue {
    long double value = 0;
    std::string derivation;  // human-readable trace of the formula applied
};

// (sqrt(alpha) + sqrt(beta))^2; the growth rate of a class merged from two
// classes with growth rates alpha and beta.
BoundValue sqrt_merge_combine(long double alpha, long double beta);

// Closed form (l1 + lm - m + 1 + 2*sum_{i=2..m-1} li)^2 for the layered
// pattern with the given layer sizes; degenerates to (2*l1)^2 for m = 1.
BoundValue layered_bound(const LayerComposition& layers);
// The induction the closed form comes from: root(l1..lm) =
// (l1+l2-1) + root(l2..lm), base (l1+l2-1) for m=2 and 2*l1 for m=1.
// Agrees with the closed form exactly, which the integer roots below let
// tests verify without floating point.
BoundValue layered_bound_recursive(const LayerComposition& layers);
long long layered_root_closed(const LayerComposition& layers);
long long layered_root_recursive(const LayerComposition& layers);

// True iff the layered bound is at most 4*ell^2 for every composition of
// ell (brute force over all 2^(ell-1) of them).
bool layered_corollary_check(int ell);

// e^{pi sqrt(2/3)} ~ 13.001954
long double rho();

// p(k) < rho^sqrt(k) for k > 0, compared in log space.
bool partition_bound_holds(int k);

// (k+1) * rho^sqrt(2k), the pairs-of-partitions bound.
BoundValue q_bound(int k);
// q_count(k) < q_bound(k), log space; the inequality needs k > 0.
bool q_bound_holds(int k);

// (1/4) (n^2 - n + 2)^2 rho^{n sqrt(1 - 1/n)}. Its n-th root decreases
// toward rho.
BoundValue conditional_1324_bound(int n);
long double conditional_1324_bound_log(int n);
// ln of the intermediate sum_{k=0..C(n,2)} (k+1) rho^sqrt(2k).
long double conditional_1324_sum_log(int n);

// (m+1) p(m+1) with m = C(n,2): exact while m+1 stays within the
// partition-count range, otherwise the rho upper bound takes over.
BoundValue s132_bound(int n);
long double s132_bound_log(int n);
// The columnwise display bound sum_{k=0..m} p(k); exact (needs m <= 1200).
Count s132_display_bound(int n);

}  // namespace permpat
