#pragma once

// Algebraic characters of a split torus (R^x)^n, recorded coordinatewise.
//
// A character here is t = (x_1..x_n) |-> prod_i sgn(x_i)^{p_i} |x_i|^{e_i}
// with integer exponents e_i and sign parities p_i in {0,1}. A plain
// monomial x_i^e has p_i = e mod 2; taking absolute values clears the
// parities and keeps the exponents.

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace shalika {

class TorusCharVec {
public:
    TorusCharVec() = default;
    explicit TorusCharVec(int n) : exps_(static_cast<std::size_t>(n), 0), par_(static_cast<std::size_t>(n), 0) {
        if (n < 0) throw std::invalid_argument("torus character needs a non-negative rank");
    }

    static TorusCharVec identity(int n) { return TorusCharVec(n); }

    int rank() const { return static_cast<int>(exps_.size()); }

    std::int64_t exp(int i) const { return exps_.at(static_cast<std::size_t>(i - 1)); }
    int parity(int i) const { return par_.at(static_cast<std::size_t>(i - 1)); }

    const std::vector<std::int64_t>& exps() const { return exps_; }

    // Multiply by the monomial x_i^e (1-based coordinate).
    TorusCharVec& mul_monomial(int i, std::int64_t e) {
        check_coord(i);
        exps_[static_cast<std::size_t>(i - 1)] += e;
        par_[static_cast<std::size_t>(i - 1)] ^= static_cast<std::uint8_t>(((e % 2) + 2) % 2);
        return *this;
    }

    // Multiply by the root character x_i / x_j raised to the given power.
    TorusCharVec& mul_root(int i, int j, std::int64_t power = 1) {
        mul_monomial(i, power);
        mul_monomial(j, -power);
        return *this;
    }

    TorusCharVec& mul_abs_power(int i, std::int64_t e) {
        check_coord(i);
        exps_[static_cast<std::size_t>(i - 1)] += e;
        return *this;
    }

    friend TorusCharVec operator*(const TorusCharVec& a, const TorusCharVec& b) {
        a.check_same_rank(b);
        TorusCharVec r = a;
        for (std::size_t i = 0; i < r.exps_.size(); ++i) {
            r.exps_[i] += b.exps_[i];
            r.par_[i] ^= b.par_[i];
        }
        return r;
    }

    TorusCharVec inverse() const {
        TorusCharVec r = *this;
        for (auto& e : r.exps_) e = -e;
        return r; // parities are their own negatives mod 2
    }

    // Absolute value of the character: same exponents, trivial signs.
    TorusCharVec abs() const {
        TorusCharVec r = *this;
        for (auto& p : r.par_) p = 0;
        return r;
    }

    bool is_identity() const {
        for (auto e : exps_)
            if (e != 0) return false;
        for (auto p : par_)
            if (p != 0) return false;
        return true;
    }

    friend bool operator==(const TorusCharVec& a, const TorusCharVec& b) {
        return a.exps_ == b.exps_ && a.par_ == b.par_;
    }
    friend bool operator!=(const TorusCharVec& a, const TorusCharVec& b) { return !(a == b); }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(exps_[i]);
            if (par_[i]) s += "-";
        }
        return s + "]";
    }

    friend std::ostream& operator<<(std::ostream& os, const TorusCharVec& c) { return os << c.str(); }

private:
    void check_coord(int i) const {
        if (i < 1 || i > rank()) throw std::out_of_range("torus coordinate out of range");
    }
    void check_same_rank(const TorusCharVec& o) const {
        if (exps_.size() != o.exps_.size())
            throw std::invalid_argument("torus characters of different rank");
    }

    std::vector<std::int64_t> exps_;
    std::vector<std::uint8_t> par_;
};

inline TorusCharVec tchar_mul(const TorusCharVec& a, const TorusCharVec& b) { return a * b; }

// Modular characters compare through their absolute values, so squaring the
// left side only doubles exponents; parities drop out of the comparison.
inline bool tchar_square_equals(const TorusCharVec& lhs, const TorusCharVec& rhs) {
    if (lhs.rank() != rhs.rank()) return false;
    for (int i = 1; i <= lhs.rank(); ++i)
        if (2 * lhs.exp(i) != rhs.exp(i)) return false;
    return true;
}

} // namespace shalika
