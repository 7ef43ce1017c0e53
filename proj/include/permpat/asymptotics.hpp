// asymptotics.hpp
// Empirical verification that n -> s_{n,k}(tau) is eventually polynomial
// with the degree the pattern's structure predicts: identity patterns die
// out entirely, Fibonacci patterns with r >= 1 inversions settle to degree
// r-1, and everything else grows like n^k/k!.
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "permpat/count.hpp"
#include "permpat/enumeration.hpp"
#include "permpat/perm.hpp"
#include "permpat/rational.hpp"

namespace permpat {

// An exact polynomial fit recovered from a finite-difference table.
struct PolyFit {
    int degree = 0;
    std::vector<Rational> coefficients;  // leading first; [0] for the zero fit
    int stabilization_point = 1;         // least n with exact agreement from there on

    bool is_zero() const;
    Rational eval(long long n) const;
    std::string poly_str() const;  // e.g. "1/2*n^2 - 1/2*n - 1"
};

// Finds the least d whose d-th finite differences are constant across
// `window` consecutive values at the tail of seq, rebuilds the polynomial
// exactly from the difference table, and reports from which n it matches.
// seq[i] is the value at n = first_index + i. Returns nullopt when nothing
// stabilizes within the data.
std::optional<PolyFit> poly_detect(std::span<const Count> seq, int window = 3, int first_index = 1);

enum class PatternClass { identity_pattern, fibonacci, non_fibonacci };

struct ProfileExpectation {
    PatternClass pattern_class = PatternClass::non_fibonacci;
    int pattern_inversions = 0;          // r
    bool in_hypothesis = true;           // false: Fibonacci pattern with k < r
    bool eventually_zero = false;
    int zero_threshold = 0;              // zero for n > (l-1)(k+1)
    std::optional<int> degree;
    std::optional<Rational> leading;     // 1/k! for non-Fibonacci; the known
                                         // constants for 132 and 1324
    std::string note;
};

// What the dichotomy predicts for the column k of `pattern`.
ProfileExpectation expected_profile(const Perm& pattern, int k);

enum class ProfileVerdict { matched, mismatched, not_applicable };

struct ProfileReport {
    Perm pattern;
    int k = 0;
    int n_max = 0;
    int window = 3;
    std::vector<Count> column;  // n = 1..n_max
    ProfileExpectation expectation;
    std::optional<PolyFit> fit;
    ProfileVerdict verdict = ProfileVerdict::mismatched;
    std::string detail;
};

// Computes the column, runs the detector, and compares against the
// expectation.
ProfileReport verify_profile(const Perm& pattern, int k, int n_max, int window = 3,
                             const EnumOptions& opts = {});

// s_{n,k}(tau) / (number of all length-n permutations with k inversions),
// exact.
Rational dichotomy_ratio(const Perm& pattern, int k, int n);

}  // namespace permpat
