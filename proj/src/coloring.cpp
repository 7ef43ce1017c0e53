#include "permpat/coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace permpat {

Perm composite_pattern(const PatternTriple& t) {
    return direct_sum(red_part_pattern(t), t.rho);
}

Perm red_part_pattern(const PatternTriple& t) {
    return direct_sum(t.sigma, skew_sum(t.tau, Perm::identity(1)));
}

Perm blue_part_pattern(const PatternTriple& t) {
    return direct_sum(skew_sum(t.tau, Perm::identity(1)), t.rho);
}

std::string Coloring::render() const {
    std::string s(static_cast<std::size_t>(n), '?');
    for (int i : red.indices) s[static_cast<std::size_t>(i) - 1] = 'R';
    for (int i : blue.indices) s[static_cast<std::size_t>(i) - 1] = 'B';
    return s;
}

Coloring red_blue_color(const Perm& pi, const PatternTriple& t) {
    const Perm red_pat = red_part_pattern(t);
    Coloring col;
    col.n = pi.size();
    std::vector<std::uint8_t> red_vals;  // memoized red subsequence
    red_vals.reserve(static_cast<std::size_t>(pi.size()));
    int min_blue = 256;
    for (int i = 1; i <= pi.size(); ++i) {
        const std::uint8_t v = static_cast<std::uint8_t>(pi.at(i));
        // Rule (a): coloring v red would complete a red occurrence of the
        // red pattern with v as its rightmost element. Checked before rule
        // (b) so traces are reproducible; the outcome does not depend on the
        // order.
        red_vals.push_back(v);
        const bool completes_red =
            detail::occurrence_search(red_vals, red_pat.raw(), static_cast<int>(red_vals.size()), nullptr);
        red_vals.pop_back();
        // Rule (b): an earlier blue element is smaller.
        const bool blue_below = min_blue < v;
        if (completes_red || blue_below) {
            col.blue.indices.push_back(i);
            min_blue = std::min(min_blue, static_cast<int>(v));
        } else {
            col.red.indices.push_back(i);
            red_vals.push_back(v);
        }
    }
    return col;
}

namespace {

std::vector<std::uint8_t> values_at(const Perm& pi, const IndexSet& I) {
    std::vector<std::uint8_t> out;
    out.reserve(I.indices.size());
    for (int i : I.indices) out.push_back(static_cast<std::uint8_t>(pi.at(i)));
    return out;
}

// Search pattern in the subsequence of pi at `where`; on hit, map the
// witness back to positions in pi.
std::optional<IndexSet> subsequence_occurrence(const Perm& pi, const IndexSet& where, const Perm& pattern) {
    const auto vals = values_at(pi, where);
    std::vector<int> sub_witness;
    if (!detail::occurrence_search(vals, pattern.raw(), 0, &sub_witness)) return std::nullopt;
    IndexSet out;
    out.indices.reserve(sub_witness.size());
    for (int s : sub_witness) out.indices.push_back(where.indices[static_cast<std::size_t>(s) - 1]);
    return out;
}

}  // namespace

ColoringCheck check_coloring_lemma(const Perm& pi, const PatternTriple& t) {
    ColoringCheck rep;
    rep.red_pattern = red_part_pattern(t);
    rep.blue_pattern = blue_part_pattern(t);
    rep.composite = composite_pattern(t);
    rep.coloring = red_blue_color(pi, t);
    rep.red_witness = subsequence_occurrence(pi, rep.coloring.red, rep.red_pattern);
    rep.red_ok = !rep.red_witness.has_value();
    rep.composite_avoided = avoids(pi, rep.composite);
    rep.blue_witness = subsequence_occurrence(pi, rep.coloring.blue, rep.blue_pattern);
    rep.blue_ok = !rep.blue_witness.has_value();
    return rep;
}

bool merge_witness_check(const Perm& pi, const IndexSet& I, const IndexSet& J,
                         const Perm& sigma, const Perm& tau) {
    if (I.size() + J.size() != pi.size()) return false;
    std::vector<bool> covered(static_cast<std::size_t>(pi.size()) + 1, false);
    for (const IndexSet* s : {&I, &J})
        for (int i : s->indices) {
            if (i < 1 || i > pi.size() || covered[static_cast<std::size_t>(i)]) return false;
            covered[static_cast<std::size_t>(i)] = true;
        }
    return pattern_at(pi, I) == sigma && pattern_at(pi, J) == tau;
}

Count merge_convolution_bound(std::span<const Count> a, std::span<const Count> b, int n) {
    if (n < 0) throw std::invalid_argument("negative length");
    if (a.size() <= static_cast<std::size_t>(n) || b.size() <= static_cast<std::size_t>(n))
        throw std::invalid_argument("count sequences must cover indices 0..n");
    Count total = 0;
    for (int k = 0; k <= n; ++k) {
        Count c = binomial(n, k);
        total += c * c * a[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(n - k)];
    }
    return total;
}

}  // namespace permpat
