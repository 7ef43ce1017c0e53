#include "permpat/bounds.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "permpat/partitions.hpp"

namespace permpat {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;

std::string fmt(long double x) {
    std::ostringstream os;
    os.precision(15);
    os << static_cast<double>(x);
    return os.str();
}

void require_positive_sizes(const LayerComposition& layers) {
    if (layers.layer_sizes.empty()) throw std::invalid_argument("layer composition must be nonempty");
    for (int s : layers.layer_sizes)
        if (s < 1) throw std::invalid_argument("layer sizes must be positive");
}

}  // namespace

BoundValue sqrt_merge_combine(long double alpha, long double beta) {
    if (!(alpha >= 0) || !(beta >= 0) || !std::isfinite(static_cast<double>(alpha)) ||
        !std::isfinite(static_cast<double>(beta)))
        throw std::invalid_argument("growth rates must be finite and non-negative");
    const long double root = sqrtl(alpha) + sqrtl(beta);
    BoundValue bv;
    bv.value = root * root;
    bv.derivation = "(sqrt(" + fmt(alpha) + ") + sqrt(" + fmt(beta) + "))^2 = " + fmt(bv.value);
    return bv;
}

long long layered_root_closed(const LayerComposition& layers) {
    require_positive_sizes(layers);
    const auto& l = layers.layer_sizes;
    const int m = static_cast<int>(l.size());
    if (m == 1) return 2LL * l[0];
    long long mid = 0;
    for (int i = 1; i + 1 < m; ++i) mid += l[static_cast<std::size_t>(i)];
    return l.front() + l.back() - m + 1 + 2 * mid;
}

long long layered_root_recursive(const LayerComposition& layers) {
    require_positive_sizes(layers);
    const auto& l = layers.layer_sizes;
    const int m = static_cast<int>(l.size());
    if (m == 1) return 2LL * l[0];
    long long root = 0;
    // root(l1..lm) = (l1+l2-1) + root(l2..lm), unrolled down to the
    // two-layer base case.
    int i = 0;
    while (m - i > 2) {
        root += l[static_cast<std::size_t>(i)] + l[static_cast<std::size_t>(i) + 1] - 1;
        ++i;
    }
    root += l[static_cast<std::size_t>(i)] + l[static_cast<std::size_t>(i) + 1] - 1;
    return root;
}

BoundValue layered_bound(const LayerComposition& layers) {
    const long long root = layered_root_closed(layers);
    BoundValue bv;
    bv.value = static_cast<long double>(root) * static_cast<long double>(root);
    std::ostringstream os;
    const auto& l = layers.layer_sizes;
    os << "(l1 + lm - m + 1 + 2*mid)^2 with layers (";
    for (std::size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l[i];
    os << ") = " << root << "^2 = " << fmt(bv.value);
    if (l.size() == 1)
        os << "; single layer reads as (2*l1)^2, though (l1-1)^2 is the known exact value";
    bv.derivation = os.str();
    return bv;
}

BoundValue layered_bound_recursive(const LayerComposition& layers) {
    const long long root = layered_root_recursive(layers);
    BoundValue bv;
    bv.value = static_cast<long double>(root) * static_cast<long double>(root);
    bv.derivation = "recursive root (l1+l2-1) + root(l2..lm) = " + std::to_string(root) + "; squared = " + fmt(bv.value);
    return bv;
}

bool layered_corollary_check(int ell) {
    if (ell < 1 || ell > 24) throw std::invalid_argument("composition check supports 1 <= ell <= 24");
    const long long target = 4LL * ell * ell;
    // Compositions of ell <-> subsets of the ell-1 gaps.
    for (unsigned mask = 0; mask < (1u << (ell - 1)); ++mask) {
        LayerComposition c;
        int run = 1;
        for (int g = 0; g < ell - 1; ++g) {
            if (mask & (1u << g)) {
                c.layer_sizes.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        c.layer_sizes.push_back(run);
        const long long root = layered_root_closed(c);
        if (root * root > target) return false;
    }
    return true;
}

long double rho() { return expl(kPi * sqrtl(2.0L / 3.0L)); }

bool partition_bound_holds(int k) {
    if (k < 1) throw std::invalid_argument("the partition bound needs k > 0");
    const long double ln_p = logl(partition_count(k).to_long_double());
    const long double ln_bound = kPi * sqrtl(2.0L * k / 3.0L);  // sqrt(k) * ln rho
    return ln_p < ln_bound;
}

BoundValue q_bound(int k) {
    if (k < 0) throw std::invalid_argument("negative argument");
    BoundValue bv;
    bv.value = (k + 1) * expl(sqrtl(2.0L * k) * logl(rho()));
    bv.derivation = "(k+1) * rho^sqrt(2k) at k=" + std::to_string(k) + " = " + fmt(bv.value);
    return bv;
}

bool q_bound_holds(int k) {
    if (k < 1) throw std::invalid_argument("the pairs bound needs k > 0");
    const long double ln_q = logl(q_count(k).to_long_double());
    const long double ln_bound = logl(static_cast<long double>(k + 1)) + sqrtl(2.0L * k) * logl(rho());
    return ln_q < ln_bound;
}

long double conditional_1324_bound_log(int n) {
    if (n < 1) throw std::invalid_argument("needs n >= 1");
    const long double nn = static_cast<long double>(n);
    const long double poly = nn * nn - nn + 2.0L;
    return logl(0.25L) + 2.0L * logl(poly) + nn * sqrtl(1.0L - 1.0L / nn) * logl(rho());
}

BoundValue conditional_1324_bound(int n) {
    BoundValue bv;
    bv.value = expl(conditional_1324_bound_log(n));
    bv.derivation = "(1/4)(n^2-n+2)^2 * rho^(n*sqrt(1-1/n)) at n=" + std::to_string(n) + " = " + fmt(bv.value);
    return bv;
}

long double conditional_1324_sum_log(int n) {
    if (n < 1) throw std::invalid_argument("needs n >= 1");
    const long long m = static_cast<long long>(n) * (n - 1) / 2;
    const long double ln_rho = logl(rho());
    // log-sum-exp over k = 0..m of ln(k+1) + sqrt(2k) ln rho; the last term
    // dominates.
    const long double peak = logl(static_cast<long double>(m + 1)) + sqrtl(2.0L * m) * ln_rho;
    long double acc = 0;
    for (long long k = 0; k <= m; ++k) {
        const long double term = logl(static_cast<long double>(k + 1)) + sqrtl(2.0L * k) * ln_rho;
        acc += expl(term - peak);
    }
    return peak + logl(acc);
}

long double s132_bound_log(int n) {
    if (n < 1) throw std::invalid_argument("needs n >= 1");
    const long long m = static_cast<long long>(n) * (n - 1) / 2;
    if (m + 1 <= kPartitionCountMax)
        return logl(static_cast<long double>(m + 1)) + logl(partition_count(static_cast<int>(m) + 1).to_long_double());
    return logl(static_cast<long double>(m + 1)) + sqrtl(static_cast<long double>(m + 1)) * logl(rho());
}

BoundValue s132_bound(int n) {
    const long long m = static_cast<long long>(n) * (n - 1) / 2;
    BoundValue bv;
    bv.value = expl(s132_bound_log(n));
    if (m + 1 <= kPartitionCountMax) {
        bv.derivation = "(m+1) * p(m+1) with m = C(n,2) = " + std::to_string(m) + ": " +
                        std::to_string(m + 1) + " * " + partition_count(static_cast<int>(m) + 1).str();
    } else {
        bv.derivation = "(m+1) * rho^sqrt(m+1) with m = C(n,2) = " + std::to_string(m) +
                        " (partition count out of exact range)";
    }
    return bv;
}

Count s132_display_bound(int n) {
    if (n < 1) throw std::invalid_argument("needs n >= 1");
    const long long m = static_cast<long long>(n) * (n - 1) / 2;
    if (m > kPartitionCountMax) throw std::overflow_error("display bound needs C(n,2) <= 1200");
    Count total = 0;
    for (int k = 0; k <= m; ++k) total += partition_count(k);
    return total;
}

}  // namespace permpat
