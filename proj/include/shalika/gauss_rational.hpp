#pragma once

// Gaussian rationals: a + b*i with exact rational a, b.
//
// These show up as character parameters, where the real part is the thing
// decisions are made on (the "exponent") and the imaginary part just has to
// be carried along exactly.

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "shalika/rational.hpp"

namespace shalika {

class GaussRat {
public:
    GaussRat() = default;
    GaussRat(Rat re) : re_(re) {}
    GaussRat(std::int64_t re) : re_(Rat(re)) {}
    GaussRat(Rat re, Rat im) : re_(re), im_(im) {}

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussRat conj() const { return GaussRat(re_, -im_); }

    GaussRat operator-() const { return GaussRat(-re_, -im_); }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
        Rat n = b.re_ * b.re_ + b.im_ * b.im_;
        if (n.is_zero()) throw std::domain_error("Gaussian rational division by zero");
        GaussRat c = a * b.conj();
        return GaussRat(c.re_ / n, c.im_ / n);
    }

    GaussRat& operator+=(const GaussRat& o) { return *this = *this + o; }
    GaussRat& operator-=(const GaussRat& o) { return *this = *this - o; }
    GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }
    GaussRat& operator/=(const GaussRat& o) { return *this = *this / o; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    // Lexicographic by (re, im); an arbitrary but fixed total order so the
    // type can key ordered containers.
    friend bool operator<(const GaussRat& a, const GaussRat& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    // "p/q+r/si" with the "+0/1i" tail dropped for real values, e.g.
    // "1/2", "1/2+1/3i", "3+-2i".
    std::string str() const {
        if (im_.is_zero()) return re_.str();
        return re_.str() + "+" + im_.str() + "i";
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussRat& z) { return os << z.str(); }

    static GaussRat parse(std::string_view text) {
        // The separating '+' is the first one past index 0; component signs
        // only ever appear as a leading '-'.
        std::size_t sep = text.find('+', 1);
        if (sep == std::string_view::npos) return GaussRat(Rat::parse(text));
        if (text.empty() || text.back() != 'i')
            throw std::invalid_argument("malformed Gaussian rational: '" + std::string(text) + "'");
        Rat re = Rat::parse(text.substr(0, sep));
        Rat im = Rat::parse(text.substr(sep + 1, text.size() - sep - 2));
        return GaussRat(re, im);
    }

private:
    Rat re_;
    Rat im_;
};

} // namespace shalika
