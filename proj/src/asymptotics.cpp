#include "permpat/asymptotics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "permpat/partitions.hpp"

namespace permpat {

bool PolyFit::is_zero() const {
    for (const Rational& c : coefficients)
        if (!c.is_zero()) return false;
    return true;
}

Rational PolyFit::eval(long long n) const {
    Rational acc;
    for (const Rational& c : coefficients) {
        acc *= Rational(n);
        acc += c;
    }
    return acc;
}

std::string PolyFit::poly_str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        const Rational& c = coefficients[i];
        if (c.is_zero() && coefficients.size() > 1) continue;
        const int power = degree - static_cast<int>(i);
        if (!first) os << " + ";
        os << c.str();
        if (power >= 1) os << "*n";
        if (power >= 2) os << "^" << power;
        first = false;
    }
    return os.str();
}

std::optional<PolyFit> poly_detect(std::span<const Count> seq, int window, int first_index) {
    if (window < 2) throw std::invalid_argument("window must be at least 2");
    const int N = static_cast<int>(seq.size());
    if (N < window) return std::nullopt;

    std::vector<std::vector<Rational>> diff;
    diff.emplace_back();
    diff[0].reserve(static_cast<std::size_t>(N));
    for (const Count& c : seq) diff[0].push_back(Rational::from_count(c));

    for (int d = 0; d < N; ++d) {
        const auto& row = diff[static_cast<std::size_t>(d)];
        const int len = static_cast<int>(row.size());
        if (len >= window) {
            bool stabilized = true;
            for (int i = len - window + 1; i < len; ++i)
                if (!(row[static_cast<std::size_t>(i)] == row[static_cast<std::size_t>(i) - 1])) {
                    stabilized = false;
                    break;
                }
            if (stabilized) {
                // Newton forward expansion anchored at the start of the
                // stabilized window.
                const int anchor = len - window;  // 0-based index into seq
                PolyFit fit;
                std::vector<Rational> coeffs{Rational(0)};  // leading first
                for (int j = 0; j <= d; ++j) {
                    // term = delta^j(anchor)/j! * prod_{t<j} (n - n_anchor - t)
                    Rational scale = diff[static_cast<std::size_t>(j)][static_cast<std::size_t>(anchor)];
                    for (int t = 2; t <= j; ++t) scale /= Rational(t);
                    std::vector<Rational> term{scale};
                    const long long n_anchor = first_index + anchor;
                    for (int t = 0; t < j; ++t) {
                        // multiply by (n - (n_anchor + t))
                        std::vector<Rational> next(term.size() + 1, Rational(0));
                        for (std::size_t c = 0; c < term.size(); ++c) {
                            next[c] += term[c];
                            next[c + 1] += term[c] * Rational(-(n_anchor + t));
                        }
                        term = std::move(next);
                    }
                    if (term.size() > coeffs.size())
                        coeffs.insert(coeffs.begin(), term.size() - coeffs.size(), Rational(0));
                    const std::size_t off = coeffs.size() - term.size();
                    for (std::size_t c = 0; c < term.size(); ++c) coeffs[off + c] += term[c];
                }
                while (coeffs.size() > 1 && coeffs.front().is_zero()) coeffs.erase(coeffs.begin());
                fit.coefficients = std::move(coeffs);
                fit.degree = static_cast<int>(fit.coefficients.size()) - 1;
                fit.stabilization_point = first_index;
                for (int i = N - 1; i >= 0; --i)
                    if (!(fit.eval(first_index + i) == Rational::from_count(seq[static_cast<std::size_t>(i)]))) {
                        fit.stabilization_point = first_index + i + 1;
                        break;
                    }
                return fit;
            }
        }
        if (len - 1 < 1) break;
        std::vector<Rational> next;
        next.reserve(static_cast<std::size_t>(len) - 1);
        for (int i = 0; i + 1 < len; ++i)
            next.push_back(row[static_cast<std::size_t>(i) + 1] - row[static_cast<std::size_t>(i)]);
        diff.push_back(std::move(next));
    }
    return std::nullopt;
}

ProfileExpectation expected_profile(const Perm& pattern, int k) {
    if (pattern.empty()) throw std::invalid_argument("profile needs a nonempty pattern");
    if (k < 0) throw std::invalid_argument("negative inversion count");
    static const Perm pat132{1, 3, 2};
    static const Perm pat1324{1, 3, 2, 4};

    ProfileExpectation e;
    const int ell = pattern.size();
    e.pattern_inversions = inversions(pattern);
    if (is_identity(pattern)) {
        e.pattern_class = PatternClass::identity_pattern;
        e.eventually_zero = true;
        e.zero_threshold = (ell - 1) * (k + 1);
        e.note = "identity pattern: column vanishes for n > " + std::to_string(e.zero_threshold);
        return e;
    }
    if (is_fibonacci(pattern)) {
        e.pattern_class = PatternClass::fibonacci;
        const int r = e.pattern_inversions;
        if (k < r) {
            e.in_hypothesis = false;
            e.note = "k = " + std::to_string(k) + " below the pattern's inversion count r = " + std::to_string(r);
            return e;
        }
        e.degree = r - 1;
        if (pattern == pat132)
            e.leading = Rational::from_count(partition_count(k));
        else if (pattern == pat1324)
            e.leading = Rational::from_count(q_count(k));
        e.note = "Fibonacci pattern with r = " + std::to_string(r) + ": degree r-1";
        return e;
    }
    e.pattern_class = PatternClass::non_fibonacci;
    e.degree = k;
    Rational lead(1);
    for (int i = 2; i <= k; ++i) lead /= Rational(i);
    e.leading = lead;
    e.note = "non-Fibonacci pattern: degree k with leading 1/k!";
    return e;
}

ProfileReport verify_profile(const Perm& pattern, int k, int n_max, int window, const EnumOptions& opts) {
    ProfileReport rep;
    rep.pattern = pattern;
    rep.k = k;
    rep.n_max = n_max;
    rep.window = window;
    rep.expectation = expected_profile(pattern, k);
    rep.column = column_values(pattern, k, n_max, opts);
    rep.fit = poly_detect(rep.column, window, 1);

    if (!rep.expectation.in_hypothesis) {
        rep.verdict = ProfileVerdict::not_applicable;
        rep.detail = rep.expectation.note;
        return rep;
    }
    if (rep.expectation.eventually_zero) {
        const int threshold = rep.expectation.zero_threshold;
        if (n_max <= threshold) {
            rep.verdict = ProfileVerdict::not_applicable;
            rep.detail = "no data beyond the vanishing threshold " + std::to_string(threshold);
            return rep;
        }
        bool all_zero = true;
        for (int n = threshold + 1; n <= n_max; ++n)
            if (!(rep.column[static_cast<std::size_t>(n) - 1] == Count(0))) {
                all_zero = false;
                break;
            }
        rep.verdict = all_zero ? ProfileVerdict::matched : ProfileVerdict::mismatched;
        rep.detail = all_zero ? "column is zero for every n > " + std::to_string(threshold)
                              : "nonzero entry beyond the vanishing threshold";
        return rep;
    }
    if (!rep.fit) {
        rep.verdict = ProfileVerdict::mismatched;
        rep.detail = "no polynomial stabilization within the data";
        return rep;
    }
    const PolyFit& fit = *rep.fit;
    const int want_degree = *rep.expectation.degree;
    if (fit.degree != want_degree) {
        rep.verdict = ProfileVerdict::mismatched;
        rep.detail = "fit degree " + std::to_string(fit.degree) + ", expected " + std::to_string(want_degree);
        return rep;
    }
    if (rep.expectation.leading && !(fit.coefficients.front() == *rep.expectation.leading)) {
        rep.verdict = ProfileVerdict::mismatched;
        rep.detail = "leading coefficient " + fit.coefficients.front().str() + ", expected " +
                     rep.expectation.leading->str();
        return rep;
    }
    rep.verdict = ProfileVerdict::matched;
    rep.detail = "fit " + fit.poly_str() + " from n = " + std::to_string(fit.stabilization_point);
    return rep;
}

Rational dichotomy_ratio(const Perm& pattern, int k, int n) {
    const std::vector<Count> col = column_values(pattern, k, n);
    const Count all = mahonian_count(n, k);
    if (all == Count(0)) throw std::domain_error("no permutations of that length with k inversions");
    return Rational::from_count(col.back()) / Rational::from_count(all);
}

}  // namespace permpat
