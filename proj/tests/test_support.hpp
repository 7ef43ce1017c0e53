// test_support.hpp
// Independent oracles for the test suites. Deliberately naive: containment
// by enumerating index subsets, avoider counts by filtering all n!
// permutations, Catalan numbers from the closed form. None of these touch
// the library's search or enumeration paths.
#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "permpat/count.hpp"
#include "permpat/perm.hpp"

namespace testsupport {

using permpat::Count;
using permpat::Perm;

// Every permutation of length n, lexicographic order.
inline void all_perms(int n, const std::function<void(const Perm&)>& fn) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        fn(Perm(std::span<const int>(v)));
    } while (std::next_permutation(v.begin(), v.end()));
}

inline void all_perms_up_to(int n_max, const std::function<void(const Perm&)>& fn) {
    for (int n = 1; n <= n_max; ++n) all_perms(n, fn);
}

// Order-isomorphism check on two equal-length value sequences.
inline bool order_isomorphic(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if ((a[i] < a[j]) != (b[i] < b[j])) return false;
    return true;
}

// Containment by brute force over all index subsets of size |pattern|.
inline bool brute_contains(const Perm& pi, const Perm& pattern) {
    const int n = pi.size(), k = pattern.size();
    if (k == 0) return true;
    if (k > n) return false;
    std::vector<int> pat_vals, idx(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) pat_vals.push_back(pattern.at(i));
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        std::vector<int> sub;
        sub.reserve(static_cast<std::size_t>(k));
        for (int i : idx) sub.push_back(pi.at(i + 1));
        if (order_isomorphic(sub, pat_vals)) return true;
        // next combination
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j) - 1] + 1;
    }
}

// C(2n, n) / (n+1)
inline Count catalan(int n) {
    return permpat::binomial(2 * n, n) / Count(static_cast<std::uint64_t>(n + 1));
}

// Every direct sum of blocks 1 and 21 with total length n.
inline void all_fibonacci_perms(int n, const std::function<void(const Perm&)>& fn) {
    std::function<void(Perm, int)> rec = [&](Perm acc, int remaining) {
        if (remaining == 0) {
            fn(acc);
            return;
        }
        rec(permpat::direct_sum(acc, Perm::identity(1)), remaining - 1);
        if (remaining >= 2) rec(permpat::direct_sum(acc, Perm{2, 1}), remaining - 2);
    };
    rec(Perm{}, n);
}

}  // namespace testsupport
