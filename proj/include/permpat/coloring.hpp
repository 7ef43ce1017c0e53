// coloring.hpp
// The constructive red-blue coloring: given pattern parts (sigma, tau, rho),
// every permutation avoiding sigma (+) (tau (-) 1) (+) rho splits into a red
// subsequence avoiding sigma (+) (tau (-) 1) and a blue subsequence avoiding
// (tau (-) 1) (+) rho. This module computes the coloring, checks the claimed
// avoidance properties with witnesses, and evaluates the merge-counting
// bound that turns the split into a growth-rate estimate.
#pragma once

#include <optional>
#include <span>
#include <string>

#include "permpat/count.hpp"
#include "permpat/perm.hpp"

namespace permpat {

// The three (possibly empty) pattern parts.
struct PatternTriple {
    Perm sigma, tau, rho;
};

// sigma (+) (tau (-) 1) (+) rho
Perm composite_pattern(const PatternTriple& t);
// sigma (+) (tau (-) 1): what the red subsequence must avoid.
Perm red_part_pattern(const PatternTriple& t);
// (tau (-) 1) (+) rho: what the blue subsequence must avoid.
Perm blue_part_pattern(const PatternTriple& t);

struct Coloring {
    int n = 0;
    IndexSet red, blue;  // disjoint, union = 1..n

    // "RRBRBR"-style rendering aligned with one-line notation.
    std::string render() const;
};

// Processes positions left to right: position i goes blue iff appending its
// value to the current reds would complete an occurrence of the red pattern
// ending at i, or some earlier blue value is smaller; red otherwise.
Coloring red_blue_color(const Perm& pi, const PatternTriple& t);

struct ColoringCheck {
    Coloring coloring;
    Perm red_pattern, blue_pattern, composite;
    bool red_ok = false;          // red subsequence avoids red_pattern
    bool composite_avoided = false;
    bool blue_ok = false;         // blue subsequence avoids blue_pattern
    // Violating occurrences, as positions in pi.
    std::optional<IndexSet> red_witness;
    std::optional<IndexSet> blue_witness;

    // The lemma's guarantee: red always clean; blue clean whenever pi avoids
    // the composite pattern.
    bool pass() const { return red_ok && (!composite_avoided || blue_ok); }
};

ColoringCheck check_coloring_lemma(const Perm& pi, const PatternTriple& t);

// True iff I and J partition the positions of pi and realize sigma and tau.
bool merge_witness_check(const Perm& pi, const IndexSet& I, const IndexSet& J,
                         const Perm& sigma, const Perm& tau);

// sum_{k=0..n} C(n,k)^2 a_k b_{n-k}, exact. Requires a and b to cover
// indices 0..n; overflow raises through Count.
Count merge_convolution_bound(std::span<const Count> a, std::span<const Count> b, int n);

}  // namespace permpat
