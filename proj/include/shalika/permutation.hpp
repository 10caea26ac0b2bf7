#pragma once

// Permutations of {1..m} in one-line notation.
//
// Images are 1-based throughout: w(k) is the image of the letter k. The
// serialized form is the comma-joined image list, "3,5,6,1,2,4". Roots are
// ordered pairs (i,j) standing for e_i - e_j; w moves alpha_{i,j} to
// alpha_{w(i),w(j)}, matching conjugation of matrix units by the
// permutation matrix of w.

#include <algorithm>
#include <compare>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace shalika {

using Root = std::pair<int, int>;

inline bool root_is_positive(const Root& a) { return a.first < a.second; }

class Perm {
public:
    Perm() = default;

    explicit Perm(std::vector<int> one_line) : img_(std::move(one_line)) {
        std::vector<char> seen(img_.size(), 0);
        for (int v : img_) {
            if (v < 1 || v > static_cast<int>(img_.size()) || seen[static_cast<std::size_t>(v - 1)])
                throw std::invalid_argument("not a permutation of 1..m");
            seen[static_cast<std::size_t>(v - 1)] = 1;
        }
    }

    static Perm identity(int m) {
        std::vector<int> v(static_cast<std::size_t>(m));
        std::iota(v.begin(), v.end(), 1);
        return Perm(std::move(v));
    }

    int size() const { return static_cast<int>(img_.size()); }

    int operator()(int k) const { return img_.at(static_cast<std::size_t>(k - 1)); }

    const std::vector<int>& images() const { return img_; }

    Perm inverse() const {
        std::vector<int> inv(img_.size());
        for (std::size_t k = 0; k < img_.size(); ++k)
            inv[static_cast<std::size_t>(img_[k] - 1)] = static_cast<int>(k + 1);
        return Perm(std::move(inv));
    }

    // (a*b)(k) = a(b(k)).
    friend Perm operator*(const Perm& a, const Perm& b) {
        if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
        std::vector<int> v(a.img_.size());
        for (std::size_t k = 0; k < v.size(); ++k)
            v[k] = a.img_[static_cast<std::size_t>(b.img_[k] - 1)];
        return Perm(std::move(v));
    }

    Root apply(const Root& r) const { return {(*this)(r.first), (*this)(r.second)}; }

    // True when the letters n+1..m are all fixed.
    bool fixes_beyond(int n) const {
        for (int k = n + 1; k <= size(); ++k)
            if ((*this)(k) != k) return false;
        return true;
    }

    // Extend a permutation of {1..n} to {1..m} by fixing the tail.
    static Perm embed_first(const Perm& s, int m) {
        std::vector<int> v(static_cast<std::size_t>(m));
        for (int k = 1; k <= s.size(); ++k) v[static_cast<std::size_t>(k - 1)] = s(k);
        for (int k = s.size() + 1; k <= m; ++k) v[static_cast<std::size_t>(k - 1)] = k;
        return Perm(std::move(v));
    }

    // Restriction to {1..n}; requires the tail to be fixed.
    Perm restrict_first(int n) const {
        if (!fixes_beyond(n)) throw std::invalid_argument("permutation moves letters beyond the prefix");
        std::vector<int> v(img_.begin(), img_.begin() + n);
        return Perm(std::move(v));
    }

    // Bruhat length = number of inversions.
    int length() const {
        int inv = 0;
        for (std::size_t i = 0; i < img_.size(); ++i)
            for (std::size_t j = i + 1; j < img_.size(); ++j)
                if (img_[i] > img_[j]) ++inv;
        return inv;
    }

    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

    std::string str() const {
        std::string s;
        for (std::size_t k = 0; k < img_.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(img_[k]);
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Perm& w) { return os << w.str(); }

    static Perm parse(std::string_view text) {
        std::vector<int> v;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t next = text.find(',', pos);
            std::string_view tok = text.substr(pos, next == std::string_view::npos ? next : next - pos);
            if (tok.empty()) throw std::invalid_argument("malformed permutation: '" + std::string(text) + "'");
            int val = 0;
            for (char c : tok) {
                if (c < '0' || c > '9')
                    throw std::invalid_argument("malformed permutation: '" + std::string(text) + "'");
                val = val * 10 + (c - '0');
                if (val > 1'000'000) throw std::invalid_argument("permutation letter out of range");
            }
            v.push_back(val);
            if (next == std::string_view::npos) break;
            pos = next + 1;
        }
        return Perm(std::move(v));
    }

private:
    std::vector<int> img_;
};

} // namespace shalika
