#include "permpat/perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace permpat {

namespace {

void check_length(std::size_t n) {
    if (n > static_cast<std::size_t>(kMaxPermLen))
        throw std::invalid_argument("permutation longer than " + std::to_string(kMaxPermLen));
}

}  // namespace

Perm::Perm(std::span<const int> values) {
    check_length(values.size());
    const int n = static_cast<int>(values.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    vals_.reserve(values.size());
    for (int v : values) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("not a rearrangement of 1.." + std::to_string(n));
        seen[static_cast<std::size_t>(v)] = true;
        vals_.push_back(static_cast<std::uint8_t>(v));
    }
}

Perm::Perm(std::initializer_list<int> values) : Perm(std::span<const int>(values.begin(), values.size())) {}

Perm from_raw_unchecked(std::vector<std::uint8_t> vals) {
    return Perm(std::move(vals), Perm::unchecked{});
}

Perm Perm::identity(int n) {
    if (n < 0) throw std::invalid_argument("negative length");
    check_length(static_cast<std::size_t>(n));
    std::vector<std::uint8_t> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), std::uint8_t{1});
    return from_raw_unchecked(std::move(v));
}

Perm Perm::parse(std::string_view text) {
    if (text == "-") return Perm{};
    if (text.empty()) throw std::invalid_argument("empty permutation is spelled \"-\"");
    std::vector<int> vals;
    if (text.find(',') != std::string_view::npos) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t next = text.find(',', pos);
            if (next == std::string_view::npos) next = text.size();
            std::string_view tok = text.substr(pos, next - pos);
            int v = 0;
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc{} || p != tok.data() + tok.size())
                throw std::invalid_argument("bad permutation entry '" + std::string(tok) + "'");
            vals.push_back(v);
            pos = next + 1;
            if (next == text.size()) break;
        }
    } else {
        // Digit string; only valid for n <= 9.
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument(std::string("bad digit '") + c + "' in permutation");
            vals.push_back(c - '0');
        }
        if (vals.size() > 9)
            throw std::invalid_argument("digit form limited to length 9; use commas");
    }
    return Perm(std::span<const int>(vals));
}

std::string Perm::str() const {
    if (vals_.empty()) return "-";
    std::string s;
    if (size() <= 9) {
        for (auto v : vals_) s.push_back(static_cast<char>('0' + v));
    } else {
        for (std::size_t i = 0; i < vals_.size(); ++i) {
            if (i) s.push_back(',');
            s += std::to_string(static_cast<int>(vals_[i]));
        }
    }
    return s;
}

int Perm::at(int pos) const {
    if (pos < 1 || pos > size()) throw std::out_of_range("permutation position out of range");
    return vals_[static_cast<std::size_t>(pos) - 1];
}

Perm standardize(std::span<const int> seq) {
    check_length(seq.size());
    const int n = static_cast<int>(seq.size());
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return seq[static_cast<std::size_t>(a)] < seq[static_cast<std::size_t>(b)]; });
    for (int i = 1; i < n; ++i)
        if (seq[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] == seq[static_cast<std::size_t>(order[static_cast<std::size_t>(i - 1)])])
            throw std::invalid_argument("standardize: duplicate entries");
    std::vector<std::uint8_t> out(static_cast<std::size_t>(n));
    for (int rank = 0; rank < n; ++rank)
        out[static_cast<std::size_t>(order[static_cast<std::size_t>(rank)])] = static_cast<std::uint8_t>(rank + 1);
    return from_raw_unchecked(std::move(out));
}

namespace {

void validate_index_set(const IndexSet& I, int n) {
    int prev = 0;
    for (int i : I.indices) {
        if (i < 1 || i > n) throw std::out_of_range("index set entry out of range");
        if (i <= prev) throw std::invalid_argument("index set not strictly increasing");
        prev = i;
    }
}

}  // namespace

Perm pattern_at(const Perm& pi, const IndexSet& positions) {
    validate_index_set(positions, pi.size());
    const auto raw = pi.raw();
    const int k = positions.size();
    std::vector<std::uint8_t> sub;
    sub.reserve(static_cast<std::size_t>(k));
    for (int i : positions.indices) sub.push_back(raw[static_cast<std::size_t>(i) - 1]);
    // Rank the picked values; they are distinct by construction.
    std::vector<std::uint8_t> sorted = sub;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::uint8_t> out(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), sub[static_cast<std::size_t>(i)]);
        out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(it - sorted.begin() + 1);
    }
    return from_raw_unchecked(std::move(out));
}

namespace detail {

namespace {

// DFS state for the occurrence search. Pattern slots are assigned left to
// right; the candidate hay value for slot j must lie strictly between the
// hay values already bound to the pattern values adjacent to pattern[j] in
// value order.
struct Searcher {
    std::span<const std::uint8_t> hay;
    std::span<const std::uint8_t> pat;
    int n, k;
    int last_slot_pos;               // 0-based hay position of the final slot, -1 if free
    std::vector<int> chosen;         // 0-based hay positions per slot
    std::vector<int> val_of;         // val_of[q] = hay value bound to pattern value q, 0 if unbound

    bool fits(int slot, int hpos) const {
        const int q = pat[static_cast<std::size_t>(slot)];
        const int v = hay[static_cast<std::size_t>(hpos)];
        int lo = 0, hi = 256;
        for (int q2 = q - 1; q2 >= 1; --q2)
            if (val_of[static_cast<std::size_t>(q2)]) { lo = val_of[static_cast<std::size_t>(q2)]; break; }
        for (int q2 = q + 1; q2 <= k; ++q2)
            if (val_of[static_cast<std::size_t>(q2)]) { hi = val_of[static_cast<std::size_t>(q2)]; break; }
        return lo < v && v < hi;
    }

    bool dfs(int slot, int from) {
        const int free_slots = (last_slot_pos >= 0) ? k - 1 : k;
        if (slot == free_slots) return true;
        const int limit = (last_slot_pos >= 0 ? last_slot_pos : n) - (free_slots - slot - 1);
        for (int i = from; i < limit; ++i) {
            if (!fits(slot, i)) continue;
            chosen[static_cast<std::size_t>(slot)] = i;
            val_of[pat[static_cast<std::size_t>(slot)]] = hay[static_cast<std::size_t>(i)];
            if (dfs(slot + 1, i + 1)) return true;
            val_of[pat[static_cast<std::size_t>(slot)]] = 0;
        }
        return false;
    }
};

}  // namespace

bool occurrence_search(std::span<const std::uint8_t> hay, std::span<const std::uint8_t> pattern,
                       int forced_last, std::vector<int>* out) {
    const int n = static_cast<int>(hay.size());
    const int k = static_cast<int>(pattern.size());
    if (k == 0) {
        // The empty pattern occurs as the empty index set, which has no
        // maximum, so a forced last position can never be met.
        if (forced_last != 0) return false;
        if (out) out->clear();
        return true;
    }
    if (k > n) return false;
    if (forced_last != 0 && (forced_last < k || forced_last > n)) return false;

    Searcher s;
    s.hay = hay;
    s.pat = pattern;
    s.n = n;
    s.k = k;
    s.last_slot_pos = forced_last != 0 ? forced_last - 1 : -1;
    s.chosen.assign(static_cast<std::size_t>(k), -1);
    s.val_of.assign(static_cast<std::size_t>(k) + 1, 0);
    if (s.last_slot_pos >= 0) {
        s.chosen[static_cast<std::size_t>(k) - 1] = s.last_slot_pos;
        s.val_of[pattern[static_cast<std::size_t>(k) - 1]] = hay[static_cast<std::size_t>(s.last_slot_pos)];
    }
    if (!s.dfs(0, 0)) return false;
    if (out) {
        out->clear();
        out->reserve(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) out->push_back(s.chosen[static_cast<std::size_t>(i)] + 1);
    }
    return true;
}

}  // namespace detail

std::optional<IndexSet> find_occurrence(const Perm& pi, const Perm& sigma, std::optional<int> forced_last) {
    if (forced_last && (*forced_last < 1 || *forced_last > pi.size()))
        throw std::out_of_range("forced_last out of range");
    std::vector<int> witness;
    if (!detail::occurrence_search(pi.raw(), sigma.raw(), forced_last.value_or(0), &witness))
        return std::nullopt;
    return IndexSet{std::move(witness)};
}

bool contains(const Perm& pi, const Perm& sigma) {
    return detail::occurrence_search(pi.raw(), sigma.raw(), 0, nullptr);
}

bool avoids(const Perm& pi, const Perm& sigma) { return !contains(pi, sigma); }

Perm direct_sum(const Perm& sigma, const Perm& tau) {
    check_length(static_cast<std::size_t>(sigma.size()) + static_cast<std::size_t>(tau.size()));
    std::vector<std::uint8_t> out;
    out.reserve(static_cast<std::size_t>(sigma.size() + tau.size()));
    for (auto v : sigma.raw()) out.push_back(v);
    for (auto v : tau.raw()) out.push_back(static_cast<std::uint8_t>(v + sigma.size()));
    return from_raw_unchecked(std::move(out));
}

Perm skew_sum(const Perm& sigma, const Perm& tau) {
    check_length(static_cast<std::size_t>(sigma.size()) + static_cast<std::size_t>(tau.size()));
    std::vector<std::uint8_t> out;
    out.reserve(static_cast<std::size_t>(sigma.size() + tau.size()));
    for (auto v : sigma.raw()) out.push_back(static_cast<std::uint8_t>(v + tau.size()));
    for (auto v : tau.raw()) out.push_back(v);
    return from_raw_unchecked(std::move(out));
}

std::vector<Perm> components(const Perm& pi) {
    std::vector<Perm> out;
    const auto raw = pi.raw();
    int start = 0, mx = 0;
    for (int i = 0; i < pi.size(); ++i) {
        mx = std::max(mx, static_cast<int>(raw[static_cast<std::size_t>(i)]));
        if (mx == i + 1) {
            std::vector<std::uint8_t> block;
            block.reserve(static_cast<std::size_t>(i - start + 1));
            for (int j = start; j <= i; ++j)
                block.push_back(static_cast<std::uint8_t>(raw[static_cast<std::size_t>(j)] - start));
            out.push_back(from_raw_unchecked(std::move(block)));
            start = i + 1;
        }
    }
    return out;
}

bool is_indecomposable(const Perm& pi) {
    return !pi.empty() && components(pi).size() == 1;
}

int inversions(const Perm& pi) {
    const auto raw = pi.raw();
    int inv = 0;
    for (std::size_t i = 0; i < raw.size(); ++i)
        for (std::size_t j = i + 1; j < raw.size(); ++j)
            if (raw[i] > raw[j]) ++inv;
    return inv;
}

InversionTable inversion_table(const Perm& pi) {
    const auto raw = pi.raw();
    InversionTable t;
    t.entries.resize(raw.size(), 0);
    for (std::size_t i = 0; i < raw.size(); ++i)
        for (std::size_t j = i + 1; j < raw.size(); ++j)
            if (raw[j] < raw[i]) ++t.entries[i];
    return t;
}

Perm perm_from_inversion_table(const InversionTable& table) {
    const int n = table.size();
    check_length(static_cast<std::size_t>(n));
    std::vector<std::uint8_t> remaining(static_cast<std::size_t>(n));
    std::iota(remaining.begin(), remaining.end(), std::uint8_t{1});
    std::vector<std::uint8_t> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int b = table.entries[static_cast<std::size_t>(i)];
        if (b < 0 || b > n - (i + 1))
            throw std::invalid_argument("inversion table entry b_" + std::to_string(i + 1) +
                                        " out of range 0.." + std::to_string(n - (i + 1)));
        // b_i smaller letters remain to the right, so the letter at i is the
        // (b_i+1)-th smallest of the unused ones.
        out.push_back(remaining[static_cast<std::size_t>(b)]);
        remaining.erase(remaining.begin() + b);
    }
    return from_raw_unchecked(std::move(out));
}

Perm reverse_complement(const Perm& pi) {
    const auto raw = pi.raw();
    const int n = pi.size();
    std::vector<std::uint8_t> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(n + 1 - raw[static_cast<std::size_t>(n) - 1 - static_cast<std::size_t>(i)]);
    return from_raw_unchecked(std::move(out));
}

std::optional<LayerComposition> layers(const Perm& pi) {
    const auto raw = pi.raw();
    const int n = pi.size();
    LayerComposition lc;
    int offset = 0;
    while (offset < n) {
        const int s = static_cast<int>(raw[static_cast<std::size_t>(offset)]) - offset;
        if (s < 1 || offset + s > n) return std::nullopt;
        for (int t = 0; t < s; ++t)
            if (raw[static_cast<std::size_t>(offset + t)] != offset + s - t) return std::nullopt;
        lc.layer_sizes.push_back(s);
        offset += s;
    }
    return lc;
}

bool is_layered(const Perm& pi) { return layers(pi).has_value(); }

bool is_fibonacci(const Perm& pi) {
    static const Perm one{1};
    static const Perm two_one{2, 1};
    for (const Perm& c : components(pi))
        if (c != one && c != two_one) return false;
    return true;
}

bool is_identity(const Perm& pi) {
    const auto raw = pi.raw();
    for (int i = 0; i < pi.size(); ++i)
        if (raw[static_cast<std::size_t>(i)] != i + 1) return false;
    return true;
}

CorePadding core_padding(const Perm& pi) {
    CorePadding cp;
    int run = 0;
    for (Perm& c : components(pi)) {
        if (c.size() == 1) {
            ++run;
        } else {
            cp.profile.push_back(run);
            run = 0;
            cp.core.push_back(std::move(c));
        }
    }
    cp.profile.push_back(run);
    return cp;
}

Perm reassemble(const CorePadding& cp) {
    if (cp.profile.size() != cp.core.size() + 1)
        throw std::invalid_argument("padding profile must have one more entry than the core");
    Perm out = Perm::identity(cp.profile.front());
    for (std::size_t i = 0; i < cp.core.size(); ++i) {
        out = direct_sum(out, cp.core[i]);
        out = direct_sum(out, Perm::identity(cp.profile[i + 1]));
    }
    return out;
}

}  // namespace permpat
