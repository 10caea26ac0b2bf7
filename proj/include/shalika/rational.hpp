#pragma once

// Exact rational numbers on 64-bit integers.
//
// Every value is kept in lowest terms with a positive denominator, so
// equality is bitwise and hashing/ordering need no normalization pass.
// Arithmetic goes through 128-bit intermediates and throws on overflow
// instead of silently wrapping; the rest of the library depends on these
// numbers being exact.

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace shalika {

namespace detail {

// Narrow a 128-bit intermediate back to 64 bits, or refuse.
inline std::int64_t narrow_checked(__int128 v) {
    if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
        throw std::overflow_error("rational arithmetic overflow");
    return static_cast<std::int64_t>(v);
}

} // namespace detail

class Rat {
public:
    constexpr Rat() : num_(0), den_(1) {}
    Rat(std::int64_t n) : num_(n), den_(1) {}
    Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    // The sign as -1, 0, +1.
    int sgn() const { return num_ < 0 ? -1 : num_ > 0 ? 1 : 0; }

    Rat operator-() const {
        Rat r;
        r.num_ = detail::narrow_checked(-static_cast<__int128>(num_));
        r.den_ = den_;
        return r;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return from_wide(n, d);
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        __int128 n = static_cast<__int128>(a.num_) * b.num_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return from_wide(n, d);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        __int128 n = static_cast<__int128>(a.num_) * b.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.num_;
        return from_wide(n, d);
    }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }

    // Total order by value; cross multiplication cannot overflow in 128 bits.
    friend bool operator<(const Rat& a, const Rat& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    // Serialized as "p/q", with "/q" dropped for integers: "3", "-1/2".
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

    // Parses the same grammar str() emits. Anything else is refused.
    static Rat parse(std::string_view text) {
        auto fail = [&] { throw std::invalid_argument("malformed rational: '" + std::string(text) + "'"); };
        std::size_t pos = 0;
        auto read_int = [&]() -> std::int64_t {
            bool neg = false;
            if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
                neg = text[pos] == '-';
                ++pos;
            }
            if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') fail();
            __int128 v = 0;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
                v = v * 10 + (text[pos] - '0');
                if (v > static_cast<__int128>(INT64_MAX)) fail();
                ++pos;
            }
            return neg ? -static_cast<std::int64_t>(v) : static_cast<std::int64_t>(v);
        };
        std::int64_t n = read_int();
        std::int64_t d = 1;
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            d = read_int();
            if (d <= 0) fail();
        }
        if (pos != text.size()) fail();
        return Rat(n, d);
    }

private:
    static Rat from_wide(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        __int128 g = wide_gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        Rat r;
        r.num_ = detail::narrow_checked(n);
        r.den_ = detail::narrow_checked(d);
        return r;
    }

    static __int128 wide_gcd(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        if (den_ < 0) {
            num_ = detail::narrow_checked(-static_cast<__int128>(num_));
            den_ = detail::narrow_checked(-static_cast<__int128>(den_));
        }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_;
    std::int64_t den_;
};

// Three-way comparison as a named function, for callers that want the
// ordering value itself rather than a bool.
inline int rat_cmp(const Rat& a, const Rat& b) {
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
}

} // namespace shalika
