// enumeration.hpp
// Pruned exhaustive generation of pattern avoiders and the inversion
// triangles s_{n,k}(tau) built from them.
//
// Generation works over standardized prefixes: a length-m node is the
// permutation formed by the first m letters, and a child appends a new
// relative value v in 1..m+1 (bumping existing values >= v). A prefix whose
// extension contains tau is pruned; since any new occurrence must end at the
// appended position, each step needs only a last-position-forced search.
// Appending v adds exactly m+1-v inversions, so an inversion cap prunes

// soundly as well.
#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <vector>

#include "permpat/count.hpp"
#include "permpat/perm.hpp"

namespace permpat {

struct EnumOptions {
    int jobs = 1;          // worker threads; 0 = hardware concurrency
    int split_depth = 4;   // prefix length at which the tree splits into tasks
    std::optional<int> k_cap;  // only count avoiders with at most this many inversions
};

// Counts of avoiders of `pattern` by length and inversion number:
// rows[n-1][k] = s_{n,k}(pattern) for n = 1..n_max. Row n has C(n,2)+1
// entries, or min(C(n,2), k_cap)+1 when built with an inversion cap.
struct InvTriangle {
    Perm pattern;
    int n_max = 0;
    std::optional<int> k_cap;
    std::vector<std::vector<Count>> rows;

    int row_width(int n) const;
    // s_{n,k}; zero for k > C(n,2), throws for k beyond an active cap.
    const Count& at(int n, int k) const;
    Count row_sum(int n) const;
};

// Streams the avoiders of length exactly n in a fixed deterministic order
// (lexicographic in the sequence of appended relative values). Sequential;
// meant for small-n bijection tests. Throws on an empty pattern.
void for_each_avoider(const Perm& pattern, int n, const std::function<void(const Perm&)>& fn);
std::vector<Perm> list_avoiders(const Perm& pattern, int n);

// s_n(pattern), via the pruned search. Avoiders are counted, not stored.
Count count_avoiders(const Perm& pattern, int n, const EnumOptions& opts = {});

// One pass over the prefix tree accumulates all rows n <= n_max. With
// jobs > 1 the tree is split at split_depth into independent subtree tasks;
// per-task triangles merge by elementwise addition, so results do not
// depend on scheduling.
InvTriangle inversion_triangle(const Perm& pattern, int n_max, const EnumOptions& opts = {});

struct MonotoneViolation {
    int n = 0, k = 0;
    Count at_n, at_next;  // s_{n,k} > s_{n+1,k}
};

// Column-monotonicity report: lists every adjacent-row decrease.
struct MonotoneReport {
    Perm pattern;
    int n_max = 0;
    std::vector<MonotoneViolation> violations;

    bool monotone() const { return violations.empty(); }
};

MonotoneReport check_inv_monotone(const Perm& pattern, int n_max, const EnumOptions& opts = {});

// s_{n,k}(pattern) for n = 1..n_max (column k). Prunes the search at k
// inversions, so this is cheap even when full rows would be huge.
std::vector<Count> column_values(const Perm& pattern, int k, int n_max, EnumOptions opts = {});

// Number of all permutations of length n with exactly k inversions, by
// dynamic programming over inversion-table digits b_i <= n-i.
Count mahonian_count(int n, int k);

// Number of Fibonacci permutations of length n with k inversions: C(n-k, k).
Count fibonacci_inv_count(int n, int k);

// "n,k,count" rows, one line per entry, with a header line.
void write_triangle_csv(std::ostream& os, const InvTriangle& t);

}  // namespace permpat
