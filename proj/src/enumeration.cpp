#include "permpat/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace permpat {

namespace {

int choose2(int n) { return n * (n - 1) / 2; }

struct Accumulator {
    // rows[n-1][k] for n = 1..n_max, widths already sized.
    std::vector<std::vector<Count>> rows;

    static Accumulator sized(int n_max, std::optional<int> k_cap) {
        Accumulator a;
        a.rows.resize(static_cast<std::size_t>(n_max));
        for (int n = 1; n <= n_max; ++n) {
            int w = choose2(n) + 1;
            if (k_cap) w = std::min(w, *k_cap + 1);
            a.rows[static_cast<std::size_t>(n) - 1].assign(static_cast<std::size_t>(w), Count(0));
        }
        return a;
    }

    void add(int n, int k) { rows[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(k)] += 1; }

    void merge_into(Accumulator& global) const {
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t k = 0; k < rows[r].size(); ++k)
                global.rows[r][k] += rows[r][k];
    }
};

// In-place child move: append relative value v to a standardized prefix.
void push_value(std::vector<std::uint8_t>& prefix, int v) {
    for (auto& x : prefix)
        if (x >= v) ++x;
    prefix.push_back(static_cast<std::uint8_t>(v));
}

void pop_value(std::vector<std::uint8_t>& prefix) {
    const std::uint8_t v = prefix.back();
    prefix.pop_back();
    for (auto& x : prefix)
        if (x > v) --x;
}

struct Search {
    std::span<const std::uint8_t> pattern;
    int n_max = 0;
    int k_cap = -1;  // -1 = uncapped

    // Expands every avoiding extension of `prefix` up to n_max, counting
    // into `acc` (which may ignore some lengths) and/or yielding full-length
    // avoiders to `leaf`.
    void expand(std::vector<std::uint8_t>& prefix, int inv, Accumulator* acc,
                const std::function<void(const Perm&)>* leaf, int leaf_len) const {
        const int m = static_cast<int>(prefix.size());
        for (int v = 1; v <= m + 1; ++v) {
            const int added = m + 1 - v;
            if (k_cap >= 0 && inv + added > k_cap) continue;
            push_value(prefix, v);
            // A new occurrence must use the appended position as its last
            // element; everything before it avoids the pattern already.
            if (!detail::occurrence_search(prefix, pattern, m + 1, nullptr)) {
                if (acc) acc->add(m + 1, inv + added);
                if (leaf && m + 1 == leaf_len) (*leaf)(from_raw_unchecked(prefix));
                if (m + 1 < n_max) expand(prefix, inv + added, acc, leaf, leaf_len);
            }
            pop_value(prefix);
        }
    }
};

struct Task {
    std::vector<std::uint8_t> prefix;
    int inv = 0;
};

// Shared driver: accumulate the full triangle up to n_max, splitting the
// prefix tree into tasks at split_depth when more than one worker is asked
// for. Counts merge by addition, so the result is schedule-independent.
Accumulator run_triangle(const Perm& pattern, int n_max, const EnumOptions& opts) {
    if (pattern.empty()) throw std::invalid_argument("avoider enumeration needs a nonempty pattern");
    if (n_max < 0) throw std::invalid_argument("negative n_max");

    Accumulator global = Accumulator::sized(n_max, opts.k_cap);
    if (n_max == 0) return global;

    Search search;
    search.pattern = pattern.raw();
    search.n_max = n_max;
    search.k_cap = opts.k_cap.value_or(-1);

    int jobs = opts.jobs == 0 ? static_cast<int>(std::thread::hardware_concurrency()) : opts.jobs;
    jobs = std::max(jobs, 1);
    const int depth = std::clamp(opts.split_depth, 1, n_max);

    std::vector<std::uint8_t> prefix;
    prefix.reserve(static_cast<std::size_t>(n_max));

    if (jobs == 1 || depth >= n_max) {
        search.expand(prefix, 0, &global, nullptr, -1);
        return global;
    }

    // Generator pass: count everything of length <= depth and collect the
    // depth-level avoiding prefixes as tasks.
    std::vector<Task> tasks;
    Search gen = search;
    gen.n_max = depth;
    std::function<void(std::vector<std::uint8_t>&, int)> gen_expand =
        [&](std::vector<std::uint8_t>& pfx, int inv) {
            const int m = static_cast<int>(pfx.size());
            for (int v = 1; v <= m + 1; ++v) {
                const int added = m + 1 - v;
                if (gen.k_cap >= 0 && inv + added > gen.k_cap) continue;
                push_value(pfx, v);
                if (!detail::occurrence_search(pfx, gen.pattern, m + 1, nullptr)) {
                    global.add(m + 1, inv + added);
                    if (m + 1 < depth)
                        gen_expand(pfx, inv + added);
                    else
                        tasks.push_back(Task{pfx, inv + added});
                }
                pop_value(pfx);
            }
        };
    gen_expand(prefix, 0);

    std::atomic<std::size_t> next{0};
    std::mutex merge_mutex;
    auto worker = [&]() {
        Accumulator local = Accumulator::sized(n_max, opts.k_cap);
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= tasks.size()) break;
            std::vector<std::uint8_t> pfx = tasks[idx].prefix;
            search.expand(pfx, tasks[idx].inv, &local, nullptr, -1);
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        local.merge_into(global);
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return global;
}

}  // namespace

int InvTriangle::row_width(int n) const {
    if (n < 1 || n > n_max) throw std::out_of_range("triangle row out of range");
    return static_cast<int>(rows[static_cast<std::size_t>(n) - 1].size());
}

const Count& InvTriangle::at(int n, int k) const {
    static const Count zero(0);
    if (n < 1 || n > n_max) throw std::out_of_range("triangle row out of range");
    if (k < 0) throw std::out_of_range("negative inversion count");
    if (k > choose2(n)) return zero;  // no permutation of length n has that many inversions
    const auto& row = rows[static_cast<std::size_t>(n) - 1];
    if (static_cast<std::size_t>(k) >= row.size())
        throw std::out_of_range("inversion count beyond the triangle's k cap");
    return row[static_cast<std::size_t>(k)];
}

Count InvTriangle::row_sum(int n) const {
    if (n < 1 || n > n_max) throw std::out_of_range("triangle row out of range");
    Count s = 0;
    for (const Count& c : rows[static_cast<std::size_t>(n) - 1]) s += c;
    return s;
}

void for_each_avoider(const Perm& pattern, int n, const std::function<void(const Perm&)>& fn) {
    if (pattern.empty()) throw std::invalid_argument("avoider enumeration needs a nonempty pattern");
    if (n < 0) throw std::invalid_argument("negative length");
    if (n == 0) {
        fn(Perm{});
        return;
    }
    Search search;
    search.pattern = pattern.raw();
    search.n_max = n;
    std::vector<std::uint8_t> prefix;
    prefix.reserve(static_cast<std::size_t>(n));
    search.expand(prefix, 0, nullptr, &fn, n);
}

std::vector<Perm> list_avoiders(const Perm& pattern, int n) {
    std::vector<Perm> out;
    for_each_avoider(pattern, n, [&](const Perm& p) { out.push_back(p); });
    return out;
}

Count count_avoiders(const Perm& pattern, int n, const EnumOptions& opts) {
    if (n == 0) {
        if (pattern.empty()) throw std::invalid_argument("avoider enumeration needs a nonempty pattern");
        return 1;  // the empty permutation avoids every nonempty pattern
    }
    Accumulator acc = run_triangle(pattern, n, opts);
    Count total = 0;
    for (const Count& c : acc.rows[static_cast<std::size_t>(n) - 1]) total += c;
    return total;
}

InvTriangle inversion_triangle(const Perm& pattern, int n_max, const EnumOptions& opts) {
    InvTriangle t;
    t.pattern = pattern;
    t.n_max = n_max;
    t.k_cap = opts.k_cap;
    t.rows = run_triangle(pattern, n_max, opts).rows;
    return t;
}

MonotoneReport check_inv_monotone(const Perm& pattern, int n_max, const EnumOptions& opts) {
    const InvTriangle t = inversion_triangle(pattern, n_max, opts);
    MonotoneReport rep;
    rep.pattern = pattern;
    rep.n_max = n_max;
    for (int n = 1; n + 1 <= n_max; ++n) {
        const int w = std::min(t.row_width(n), t.row_width(n + 1));
        for (int k = 0; k < w; ++k) {
            const Count& a = t.at(n, k);
            const Count& b = t.at(n + 1, k);
            if (a > b) rep.violations.push_back(MonotoneViolation{n, k, a, b});
        }
    }
    return rep;
}

std::vector<Count> column_values(const Perm& pattern, int k, int n_max, EnumOptions opts) {
    if (k < 0) throw std::invalid_argument("negative inversion count");
    opts.k_cap = k;
    const InvTriangle t = inversion_triangle(pattern, n_max, opts);
    std::vector<Count> col;
    col.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) col.push_back(t.at(n, k));
    return col;
}

Count mahonian_count(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("negative argument");
    if (k > choose2(n)) return 0;
    // Inversion tables are exactly the digit sequences with b_i <= n-i, so
    // count digit sequences with the given sum. Sliding-window update per
    // digit bound.
    std::vector<Count> dp(static_cast<std::size_t>(k) + 1, Count(0));
    dp[0] = 1;
    for (int bound = 1; bound <= n - 1; ++bound) {
        std::vector<Count> next(static_cast<std::size_t>(k) + 1, Count(0));
        for (int j = 0; j <= k; ++j) {
            Count s = dp[static_cast<std::size_t>(j)];
            if (j > 0) s += next[static_cast<std::size_t>(j) - 1];
            if (j - bound - 1 >= 0) s -= dp[static_cast<std::size_t>(j - bound - 1)];
            next[static_cast<std::size_t>(j)] = s;
        }
        dp = std::move(next);
    }
    return dp[static_cast<std::size_t>(k)];
}

Count fibonacci_inv_count(int n, int k) {
    if (n < 0 || k < 0) return 0;
    return binomial(n - k, k);  // zero when k > n-k
}

void write_triangle_csv(std::ostream& os, const InvTriangle& t) {
    os << "n,k,count\n";
    for (int n = 1; n <= t.n_max; ++n) {
        const auto& row = t.rows[static_cast<std::size_t>(n) - 1];
        for (std::size_t k = 0; k < row.size(); ++k)
            os << n << ',' << k << ',' << row[k].str() << '\n';
    }
}

}  // namespace permpat
