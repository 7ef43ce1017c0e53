// perm.hpp
// Permutations in one-line notation and the structural machinery built on
// them: pattern containment search, direct/skew sums, component and layer
// decompositions, inversion tables, reverse-complement.
//
// Conventions: positions and values are 1-based, matching the usual
// combinatorial notation. All types are immutable values and all operations
// are pure, so everything here is safe to use concurrently.
#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permpat {

// Hard cap on permutation length; values fit in a byte and desk-scale
// enumeration never gets anywhere near it.
inline constexpr int kMaxPermLen = 64;

// A permutation of {1,...,n} in one-line notation. The empty permutation is
// a legitimate value (it shows up as an empty pattern part in the coloring
// lemma and as the k=0 partition image).
class Perm {
public:
    Perm() = default;
    // Validates that `values` is a rearrangement of 1..n.
    explicit Perm(std::span<const int> values);
    explicit Perm(std::initializer_list<int> values);

    static Perm identity(int n);

    // Text forms: "364251" for n <= 9, "3,6,4,2,5,1" otherwise, "-" for the
    // empty permutation.
    static Perm parse(std::string_view text);
    std::string str() const;

    int size() const { return static_cast<int>(vals_.size()); }
    bool empty() const { return vals_.empty(); }
    // 1-based access.
    int at(int pos) const;
    std::span<const std::uint8_t> raw() const { return vals_; }

    friend bool operator==(const Perm&, const Perm&) = default;
    friend bool operator<(const Perm& a, const Perm& b) { return a.vals_ < b.vals_; }
    friend std::ostream& operator<<(std::ostream& os, const Perm& p) { return os << p.str(); }

private:
    struct unchecked {};
    Perm(std::vector<std::uint8_t> vals, unchecked) : vals_(std::move(vals)) {}

    std::vector<std::uint8_t> vals_;

    friend Perm from_raw_unchecked(std::vector<std::uint8_t> vals);
};

// Internal fast path for callers that have already established the
// permutation invariant.
Perm from_raw_unchecked(std::vector<std::uint8_t> vals);

// A strictly increasing set of positions into some permutation.
struct IndexSet {
    std::vector<int> indices;  // 1-based, strictly increasing

    int size() const { return static_cast<int>(indices.size()); }
    friend bool operator==(const IndexSet&, const IndexSet&) = default;
};

// The sequence b_1...b_n where b_i counts letters right of position i that
// are smaller than the letter at i. Sums to the inversion number.
struct InversionTable {
    std::vector<int> entries;

    int size() const { return static_cast<int>(entries.size()); }
    friend bool operator==(const InversionTable&, const InversionTable&) = default;
};

// Layer sizes of a layered permutation, left to right.
struct LayerComposition {
    std::vector<int> layer_sizes;

    friend bool operator==(const LayerComposition&, const LayerComposition&) = default;
};

// Decomposition of a permutation into its indecomposable blocks of size >= 2
// (the core) and the sizes of the identity runs around them (the padding
// profile, one entry more than the core).
struct CorePadding {
    std::vector<Perm> core;
    std::vector<int> profile;

    friend bool operator==(const CorePadding&, const CorePadding&) = default;
};

// The unique permutation order-isomorphic to a sequence of distinct
// integers. Throws std::invalid_argument on duplicates.
Perm standardize(std::span<const int> seq);

// pi[I]: standardization of the subsequence of pi at positions I.
Perm pattern_at(const Perm& pi, const IndexSet& positions);

// Searches for an index set I with pattern_at(pi, I) == sigma. When
// `forced_last` is given, only occurrences with max(I) == forced_last are
// considered. Returns the lexicographically least witness, or nullopt.
// Depth-first over pattern slots left to right with value-interval pruning;
// fine for the short patterns used here.
std::optional<IndexSet> find_occurrence(const Perm& pi, const Perm& sigma,
                                        std::optional<int> forced_last = std::nullopt);

bool contains(const Perm& pi, const Perm& sigma);
bool avoids(const Perm& pi, const Perm& sigma);

Perm direct_sum(const Perm& sigma, const Perm& tau);
Perm skew_sum(const Perm& sigma, const Perm& tau);

// Maximal decomposition into indecomposable summands; folding the result
// with direct_sum recovers the input.
std::vector<Perm> components(const Perm& pi);
bool is_indecomposable(const Perm& pi);

int inversions(const Perm& pi);

InversionTable inversion_table(const Perm& pi);
// Inverse of inversion_table; rejects tables with b_i > n - i.
Perm perm_from_inversion_table(const InversionTable& table);

// tau'_i = n + 1 - tau_{n+1-i}; an involution exchanging 132- and
// 213-avoiders.
Perm reverse_complement(const Perm& pi);

// Layer sizes iff pi is a concatenation of decreasing runs, each run's
// values below the next run's.
std::optional<LayerComposition> layers(const Perm& pi);
bool is_layered(const Perm& pi);

// True iff every component is 1 or 21 (equivalently: layered with all
// layers of size <= 2).
bool is_fibonacci(const Perm& pi);

bool is_identity(const Perm& pi);

CorePadding core_padding(const Perm& pi);
Perm reassemble(const CorePadding& cp);

namespace detail {
// Occurrence search over raw value sequences. `hay` may be any sequence of
// distinct values; `pattern` must be a permutation of 1..k. `forced_last` is
// a 1-based position in hay or 0 for unconstrained. Fills `out` with 1-based
// hay positions when non-null.
bool occurrence_search(std::span<const std::uint8_t> hay, std::span<const std::uint8_t> pattern,
                       int forced_last, std::vector<int>* out);
}  // namespace detail

}  // namespace permpat
