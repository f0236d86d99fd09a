#pragma once

#include <cassert>
#include <numeric>
#include <string>

#include "deltanu/core.hpp"

namespace deltanu {

/// Exact rational on 64-bit components, always in lowest terms with a
/// positive denominator. All bound formulas are evaluated with this type;
/// no floating point is involved anywhere in a threshold decision.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Value n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(Value n, Value d) {
        assert(d != 0);
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const Value g = std::gcd(n < 0 ? -n : n, d);
        num_ = g ? n / g : n;
        den_ = g ? d / g : d;
    }

    Value num() const { return num_; }
    Value den() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        assert(b.num_ != 0);
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rational operator-() const { return Rational(-num_, den_); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Value floor() const {
        Value q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    Value ceil() const {
        Value q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0) ++q;
        return q;
    }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_)
                         : std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    using i128 = __int128;

    static Rational make(i128 n, i128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const i128 g = gcd128(n < 0 ? -n : n, d);
        if (g) {
            n /= g;
            d /= g;
        }
        assert(n <= INT64_MAX && n >= INT64_MIN && d <= INT64_MAX);
        Rational r;
        r.num_ = static_cast<Value>(n);
        r.den_ = static_cast<Value>(d);
        return r;
    }
    static i128 gcd128(i128 a, i128 b) {
        while (b) {
            const i128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    Value num_;
    Value den_;
};

inline Rational rat_max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational rat_min(const Rational& a, const Rational& b) { return b < a ? b : a; }

}  // namespace deltanu
