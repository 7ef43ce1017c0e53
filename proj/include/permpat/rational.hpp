// rational.hpp
// Exact rationals over checked 128-bit integers, for finite-difference
// tables and polynomial coefficients where floating point would blur the
// verdict.
#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include "permpat/count.hpp"

namespace permpat {

class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n) {}
    Rational(long long n, long long d) : num_(n), den_(d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        normalize();
    }

    static Rational from_count(const Count& c) {
        if (c.v_ > static_cast<unsigned __int128>(kMaxI128))
            throw std::overflow_error("count too large for exact rational");
        Rational r;
        r.num_ = static_cast<i128>(c.v_);
        return r;
    }

    Rational& operator+=(const Rational& o) {
        num_ = checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_));
        den_ = checked_mul(den_, o.den_);
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += Rational::raw(-o.num_, o.den_); }
    Rational& operator*=(const Rational& o) {
        num_ = checked_mul(num_, o.num_);
        den_ = checked_mul(den_, o.den_);
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        num_ = checked_mul(num_, o.den_);
        den_ = checked_mul(den_, o.num_);
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return raw(-num_, den_); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
    }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    long double to_long_double() const {
        return static_cast<long double>(num_) / static_cast<long double>(den_);
    }

    std::string str() const {
        std::string s = i128_str(num_);
        if (den_ != 1) s += "/" + i128_str(den_);
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    using i128 = __int128;
    static constexpr i128 kMaxI128 = ~(i128{1} << 127);

    i128 num_ = 0;
    i128 den_ = 1;

    static Rational raw(i128 n, i128 d) {
        Rational r;
        r.num_ = n;
        r.den_ = d;
        r.normalize();
        return r;
    }

    static i128 checked_add(i128 a, i128 b) {
        i128 out;
        if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("rational overflow");
        return out;
    }
    static i128 checked_mul(i128 a, i128 b) {
        i128 out;
        if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("rational overflow");
        return out;
    }

    static i128 gcd128(i128 a, i128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            const i128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static std::string i128_str(i128 v) {
        if (v == 0) return "0";
        const bool neg = v < 0;
        unsigned __int128 x = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
        std::string s;
        while (x > 0) {
            s.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
            x /= 10;
        }
        if (neg) s.push_back('-');
        return {s.rbegin(), s.rend()};
    }

    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        const i128 g = gcd128(num_, den_);
        num_ /= g;
        den_ /= g;
    }
};

}  // namespace permpat
