// partitions.hpp
// Integer partitions, their counting, and the two constructive bijections
// tying them to pattern avoiders: a partition of k represents a unique
// indecomposable 132-avoider with k inversions (via inversion tables), and
// 1324-avoiders with few inversions correspond to ordered pairs of
// partitions.
#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "permpat/count.hpp"
#include "permpat/perm.hpp"

namespace permpat {

// Thrown when an input permutation contains a pattern it was required to
// avoid.
class pattern_violation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Thrown when an input permutation has too many inversions for the stated
// domain.
class inversion_violation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Weakly decreasing positive parts; the empty partition (of 0) is valid.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int sum() const;
    bool empty() const { return parts.empty(); }

    // "5+4+4+1+1" (or with ','); the empty partition is spelled "0".
    static Partition parse(std::string_view text);
    std::string str(char sep = '+') const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }
    friend std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }
};

struct PartitionPair {
    Partition lambda, mu;

    friend bool operator==(const PartitionPair&, const PartitionPair&) = default;
};

// p(k) by Euler's pentagonal-number recurrence, memoized. 128-bit exact;
// k is capped at 1200 to stay within the count width.
Count partition_count(int k);
inline constexpr int kPartitionCountMax = 1200;

// Every partition of k exactly once, in reverse-lexicographic order:
// (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
void for_each_partition(int k, const std::function<void(const Partition&)>& fn);
std::vector<Partition> list_partitions(int k);

// |Q(k)| = sum_{i=0..k} p(i) p(k-i): ordered pairs of partitions with total
// sum k.
Count q_count(int k);

// The unique indecomposable 132-avoider with inversion table lambda (padded
// with zeros): length <= |lambda|+1, exactly |lambda| inversions.
Perm indecomposable_from_partition(const Partition& lambda);

// Inversion table of a 132-avoider with trailing zeros dropped; weakly
// decreasing exactly because the permutation avoids 132. Throws
// pattern_violation otherwise.
Partition partition_of_132_avoider(const Perm& pi);

// The unique 132-avoider of length n represented by lambda: the
// indecomposable representative padded with a trailing identity.
Perm perm_132_from_partition(const Partition& lambda, int n);

// Forward direction of the pairs-of-partitions correspondence. Requires pi
// to avoid 1324 with inv(pi) < n-1; the two precondition failures are
// reported distinctly (pattern_violation / inversion_violation).
PartitionPair bijection_1324_forward(const Perm& pi);

// Inverse direction: sigma (+) identity padding (+) tau for length n.
// Requires n >= |lambda| + |mu| + 2.
Perm bijection_1324_inverse(const PartitionPair& pair, int n);

}  // namespace permpat
