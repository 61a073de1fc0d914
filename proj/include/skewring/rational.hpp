#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace skewring {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(BigInt n) : num_(std::move(n)) {}  // NOLINT(google-explicit-constructor)
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_ == 0) throw DomainError("rational with zero denominator");
        normalize();
    }

    /// Parses "-3", "3/4" or a decimal such as "0.125" exactly.
    static Rational parse(std::string_view text) {
        auto fail = [&] { return ConfigError("malformed rational '" + std::string(text) + "'"); };
        if (text.empty()) throw fail();
        bool negative = false;
        std::size_t pos = 0;
        if (text[0] == '-' || text[0] == '+') {
            negative = text[0] == '-';
            pos = 1;
        }
        auto digits = [&](std::string_view s) {
            if (s.empty()) return false;
            for (char c : s)
                if (c < '0' || c > '9') return false;
            return true;
        };
        std::string_view body = text.substr(pos);
        Rational out;
        if (auto slash = body.find('/'); slash != std::string_view::npos) {
            auto n = body.substr(0, slash);
            auto d = body.substr(slash + 1);
            if (!digits(n) || !digits(d)) throw fail();
            BigInt den{std::string(d)};
            if (den == 0) throw fail();
            out = Rational(BigInt(std::string(n)), den);
        } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
            auto whole = body.substr(0, dot);
            auto frac = body.substr(dot + 1);
            if ((!whole.empty() && !digits(whole)) || !digits(frac)) throw fail();
            BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
            BigInt n = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
            n = n * scale + BigInt(std::string(frac));
            out = Rational(n, scale);
        } else {
            if (!digits(body)) throw fail();
            out = Rational(BigInt(std::string(body)));
        }
        return negative ? -out : out;
    }

    const BigInt& numerator() const noexcept { return num_; }
    const BigInt& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return num_.sign(); }

    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        if (den_ == o.den_) {
            num_ += o.num_;
        } else {
            num_ = num_ * o.den_ + o.num_ * den_;
            den_ *= o.den_;
        }
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational inverse() const { return Rational(1) / *this; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        BigInt lhs = a.num_ * b.den_;
        BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "p" or "p/q"; the form accepted by parse().
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    void normalize() {
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (den_ == 1) return;
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_{0};
    BigInt den_{1};
};

}  // namespace skewring
