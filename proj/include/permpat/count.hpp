// count.hpp
// Exact 128-bit counters with overflow-checked arithmetic. Every count the
// library produces (avoider counts, partition numbers, binomials) goes
// through this type; overflow raises std::overflow_error, never wraps.
#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace permpat {

class Count {
public:
    constexpr Count() = default;
    constexpr Count(std::uint64_t v) : v_(v) {}

    Count& operator+=(Count o) {
        if (v_ > kMax - o.v_) throw std::overflow_error("odometer overflow: 128-bit count addition");
        v_ += o.v_;
        return *this;
    }
    Count& operator-=(Count o) {
        if (o.v_ > v_) throw std::overflow_error("count subtraction below zero");
        v_ -= o.v_;
        return *this;
    }
    Count& operator*=(Count o) {
        if (v_ != 0 && o.v_ > kMax / v_) throw std::overflow_error("odometer overflow: 128-bit count multiplication");
        v_ *= o.v_;
        return *this;
    }
    // Exact division only; used by the multiplicative binomial formula where
    // each intermediate quotient is an integer.
    Count& operator/=(Count o) {
        if (o.v_ == 0) throw std::domain_error("count division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Count operator+(Count a, Count b) { return a += b; }
    friend Count operator-(Count a, Count b) { return a -= b; }
    friend Count operator*(Count a, Count b) { return a *= b; }
    friend Count operator/(Count a, Count b) { return a /= b; }

    friend bool operator==(const Count&, const Count&) = default;
    friend bool operator<(Count a, Count b) { return a.v_ < b.v_; }
    friend bool operator>(Count a, Count b) { return b < a; }
    friend bool operator<=(Count a, Count b) { return !(b < a); }
    friend bool operator>=(Count a, Count b) { return !(a < b); }

    bool fits_uint64() const { return v_ <= u128{std::uint64_t(-1)}; }
    std::uint64_t to_uint64() const {
        if (!fits_uint64()) throw std::overflow_error("count does not fit in 64 bits");
        return static_cast<std::uint64_t>(v_);
    }
    long double to_long_double() const { return static_cast<long double>(v_); }

    std::string str() const {
        if (v_ == 0) return "0";
        std::string s;
        u128 x = v_;
        while (x > 0) {
            s.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
            x /= 10;
        }
        std::reverse(s.begin(), s.end());
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Count& c) { return os << c.str(); }

private:
    using u128 = unsigned __int128;
    static constexpr u128 kMax = ~u128{0};
    u128 v_ = 0;

    friend class Rational;
};

// C(n, k), exact. Intermediate products stay integral (running product is
// always a binomial coefficient).
inline Count binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Count c = 1;
    for (int i = 1; i <= k; ++i) {
        c *= Count(static_cast<std::uint64_t>(n - k + i));
        c /= Count(static_cast<std::uint64_t>(i));
    }
    return c;
}

}  // namespace permpat
