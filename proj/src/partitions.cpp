#include "permpat/partitions.hpp"

#include <charconv>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace permpat {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    int prev = 1 << 30;
    for (int x : parts) {
        if (x < 1) throw std::invalid_argument("partition parts must be positive");
        if (x > prev) throw std::invalid_argument("partition parts must be weakly decreasing");
        prev = x;
    }
}

int Partition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition Partition::parse(std::string_view text) {
    if (text == "0") return Partition{};
    if (text.empty()) throw std::invalid_argument("empty partition is spelled \"0\"");
    const char sep = text.find(',') != std::string_view::npos ? ',' : '+';
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(sep, pos);
        if (next == std::string_view::npos) next = text.size();
        std::string_view tok = text.substr(pos, next - pos);
        int v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || p != tok.data() + tok.size())
            throw std::invalid_argument("bad partition part '" + std::string(tok) + "'");
        parts.push_back(v);
        pos = next + 1;
        if (next == text.size()) break;
    }
    return Partition(std::move(parts));
}

std::string Partition::str(char sep) const {
    if (parts.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s.push_back(sep);
        s += std::to_string(parts[i]);
    }
    return s;
}

Count partition_count(int k) {
    if (k < 0) throw std::invalid_argument("negative partition argument");
    if (k > kPartitionCountMax)
        throw std::overflow_error("partition_count limited to k <= " + std::to_string(kPartitionCountMax));
    static std::vector<Count> table{Count(1)};  // p(0)
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    while (table.size() <= static_cast<std::size_t>(k)) {
        const int n = static_cast<int>(table.size());
        Count pn = 0;
        // p(n) = sum_j (-1)^{j-1} [p(n - j(3j-1)/2) + p(n - j(3j+1)/2)].
        // Folding a full pair at a time keeps the partial sums non-negative.
        for (int j = 1;; ++j) {
            const int g1 = j * (3 * j - 1) / 2;
            if (g1 > n) break;
            Count term = table[static_cast<std::size_t>(n - g1)];
            const int g2 = j * (3 * j + 1) / 2;
            if (g2 <= n) term += table[static_cast<std::size_t>(n - g2)];
            if (j % 2 == 1)
                pn += term;
            else
                pn -= term;
        }
        table.push_back(pn);
    }
    return table[static_cast<std::size_t>(k)];
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& stack,
                    const std::function<void(const Partition&)>& fn) {
    if (remaining == 0) {
        Partition p;
        p.parts = stack;
        fn(p);
        return;
    }
    for (int part = std::min(max_part, remaining); part >= 1; --part) {
        stack.push_back(part);
        partitions_rec(remaining - part, part, stack, fn);
        stack.pop_back();
    }
}

}  // namespace

void for_each_partition(int k, const std::function<void(const Partition&)>& fn) {
    if (k < 0) throw std::invalid_argument("negative partition argument");
    std::vector<int> stack;
    partitions_rec(k, k, stack, fn);
}

std::vector<Partition> list_partitions(int k) {
    std::vector<Partition> out;
    for_each_partition(k, [&](const Partition& p) { out.push_back(p); });
    return out;
}

Count q_count(int k) {
    if (k < 0) throw std::invalid_argument("negative argument");
    Count total = 0;
    for (int i = 0; i <= k; ++i) total += partition_count(i) * partition_count(k - i);
    return total;
}

Perm indecomposable_from_partition(const Partition& lambda) {
    const int k = lambda.sum();
    if (k + 1 > kMaxPermLen)
        throw std::invalid_argument("partition sum too large for the permutation length cap");
    // lambda_i <= k-i+1, so padding with zeros to length k+1 is always a
    // valid inversion table.
    InversionTable t;
    t.entries = lambda.parts;
    t.entries.resize(static_cast<std::size_t>(k) + 1, 0);
    const Perm whole = perm_from_inversion_table(t);
    return components(whole).front();
}

Partition partition_of_132_avoider(const Perm& pi) {
    static const Perm pat132{1, 3, 2};
    if (contains(pi, pat132)) throw pattern_violation("permutation contains 132");
    InversionTable t = inversion_table(pi);
    while (!t.entries.empty() && t.entries.back() == 0) t.entries.pop_back();
    return Partition(std::move(t.entries));
}

Perm perm_132_from_partition(const Partition& lambda, int n) {
    const Perm sigma = indecomposable_from_partition(lambda);
    if (n < sigma.size())
        throw std::invalid_argument("length " + std::to_string(n) + " too small; representative has length " +
                                    std::to_string(sigma.size()));
    return direct_sum(sigma, Perm::identity(n - sigma.size()));
}

PartitionPair bijection_1324_forward(const Perm& pi) {
    static const Perm pat1324{1, 3, 2, 4};
    const int n = pi.size();
    const int k = inversions(pi);
    if (contains(pi, pat1324)) throw pattern_violation("permutation contains 1324");
    if (k >= n - 1)
        throw inversion_violation("needs inv(pi) < n-1, got inv=" + std::to_string(k) + ", n=" + std::to_string(n));
    // With k < n-1 there are at least two components and only the outer two
    // can carry inversions; the first avoids 132, the last avoids 213.
    const std::vector<Perm> comps = components(pi);
    const Perm& sigma = comps.front();
    const Perm& tau = comps.back();
    PartitionPair pair;
    pair.lambda = partition_of_132_avoider(sigma);
    pair.mu = partition_of_132_avoider(reverse_complement(tau));
    return pair;
}

Perm bijection_1324_inverse(const PartitionPair& pair, int n) {
    const int k = pair.lambda.sum() + pair.mu.sum();
    if (n < k + 2)
        throw std::invalid_argument("needs n >= |lambda| + |mu| + 2 = " + std::to_string(k + 2));
    const Perm sigma = indecomposable_from_partition(pair.lambda);
    const Perm tau = reverse_complement(indecomposable_from_partition(pair.mu));
    const int padding = n - sigma.size() - tau.size();
    return direct_sum(direct_sum(sigma, Perm::identity(padding)), tau);
}

}  // namespace permpat
