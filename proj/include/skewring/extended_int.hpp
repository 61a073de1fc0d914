#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "error.hpp"

namespace skewring {

/// An integer or a single infinity: -inf when Sign < 0 (degrees), +inf when
/// Sign > 0 (orders). The infinity is never represented as an integer.
template <int Sign>
class ExtendedInt {
    static_assert(Sign == -1 || Sign == 1);

public:
    constexpr ExtendedInt() = default;  // the infinity
    constexpr ExtendedInt(std::int64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)

    static constexpr ExtendedInt infinity() { return {}; }

    constexpr bool is_infinite() const { return !value_.has_value(); }
    constexpr bool is_finite() const { return value_.has_value(); }

    std::int64_t value() const {
        if (!value_) throw DomainError(Sign < 0 ? "degree of the zero polynomial is -inf" : "order is +inf");
        return *value_;
    }

    friend constexpr bool operator==(const ExtendedInt&, const ExtendedInt&) = default;

    friend constexpr std::strong_ordering operator<=>(const ExtendedInt& a, const ExtendedInt& b) {
        if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
        if (a.is_infinite()) return Sign < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        if (b.is_infinite()) return Sign < 0 ? std::strong_ordering::greater : std::strong_ordering::less;
        return *a.value_ <=> *b.value_;
    }

    /// Infinity absorbs.
    friend constexpr ExtendedInt operator+(const ExtendedInt& a, const ExtendedInt& b) {
        if (a.is_infinite() || b.is_infinite()) return {};
        return *a.value_ + *b.value_;
    }

    std::string str() const {
        if (is_infinite()) return Sign < 0 ? "-inf" : "+inf";
        return std::to_string(*value_);
    }

private:
    std::optional<std::int64_t> value_;
};

using Degree = ExtendedInt<-1>;
using Order = ExtendedInt<1>;

}  // namespace skewring
