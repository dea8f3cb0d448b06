#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "error.hpp"

namespace nsalg {

using Int = std::int64_t;

namespace detail {

inline Int checked_mul(Int a, Int b) {
    Int r{};
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer multiplication overflow");
    return r;
}

inline Int checked_add(Int a, Int b) {
    Int r{};
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer addition overflow");
    return r;
}

inline Int checked_lcm(Int a, Int b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / std::gcd(a, b), b);
}

}  // namespace detail

/// Exact rational number kept in lowest terms with a positive denominator.
class Rat {
public:
    constexpr Rat() = default;
    constexpr Rat(Int value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)

    Rat(Int num, Int den) {
        if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const Int g = std::gcd(num, den);
        num_ = num / g;
        den_ = den / g;
    }

    constexpr Int num() const noexcept { return num_; }
    constexpr Int den() const noexcept { return den_; }
    constexpr bool is_integer() const noexcept { return den_ == 1; }

    /// Parses "7", "-3", "35/2" (surrounding whitespace tolerated).
    static Rat parse(std::string_view text) {
        while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
        while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
        const auto slash = text.find('/');
        auto parse_int = [&](std::string_view part) {
            Int value{};
            if (!part.empty() && part.front() == '+') part.remove_prefix(1);
            const auto* first = part.data();
            const auto* last = part.data() + part.size();
            auto [ptr, ec] = std::from_chars(first, last, value);
            if (part.empty() || ec != std::errc{} || ptr != last) {
                throw Error(ErrorCode::ParseError, "not a rational number: '" + std::string(text) + "'");
            }
            return value;
        };
        if (slash == std::string_view::npos) return Rat(parse_int(text));
        return Rat(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        const Int l = detail::checked_lcm(a.den_, b.den_);
        return Rat(detail::checked_add(detail::checked_mul(a.num_, l / a.den_), detail::checked_mul(b.num_, l / b.den_)), l);
    }
    friend Rat operator-(const Rat& a) { return Rat(-a.num_, a.den_); }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        // cross-reduce first to keep intermediates small
        const Int g1 = std::gcd(a.num_, b.den_);
        const Int g2 = std::gcd(b.num_, a.den_);
        const Int n1 = g1 ? a.num_ / g1 : a.num_;
        const Int d2 = g1 ? b.den_ / g1 : b.den_;
        const Int n2 = g2 ? b.num_ / g2 : b.num_;
        const Int d1 = g2 ? a.den_ / g2 : a.den_;
        return Rat(detail::checked_mul(n1, n2), detail::checked_mul(d1, d2));
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw Error(ErrorCode::PreconditionFailed, "division by zero");
        return a * Rat(b.den_, b.num_);
    }

    friend bool operator==(const Rat&, const Rat&) = default;
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    Int num_ = 0;
    Int den_ = 1;
};

}  // namespace nsalg
