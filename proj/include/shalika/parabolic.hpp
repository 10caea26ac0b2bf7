#pragma once

// Cuspidal compositions of 2n and the block bookkeeping attached to the
// corresponding standard parabolic of GL(2n).
//
// Real cuspidal supports only allow block sizes 1 and 2 (characters and
// relative discrete series), and the Shalika subgroup needs an even total.
// Block i occupies positions a_i .. a_i + n_i - 1; for a 2-block the second
// position is written b_i. The simple roots inside the Levi are exactly
// alpha_{a_i} for the 2-blocks.

#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace shalika {

class Composition {
public:
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw std::invalid_argument("composition must have at least one part");
        int total = 0;
        for (int p : parts_) {
            if (p != 1 && p != 2)
                throw std::invalid_argument("composition parts must be 1 or 2 (cuspidal support)");
            total += p;
        }
        if (total % 2 != 0)
            throw std::invalid_argument("composition must sum to an even number 2n");
    }

    const std::vector<int>& parts() const { return parts_; }
    int blocks() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return parts_.at(static_cast<std::size_t>(i - 1)); }

    int total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int n() const { return total() / 2; }

    friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Composition& a, const Composition& b) { return !(a == b); }
    friend bool operator<(const Composition& a, const Composition& b) { return a.parts_ < b.parts_; }

    // "2+2+2"
    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += "+";
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    static Composition parse(std::string_view text) {
        std::vector<int> parts;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t next = text.find('+', pos);
            std::string_view tok = text.substr(pos, next == std::string_view::npos ? next : next - pos);
            if (tok.size() != 1 || (tok[0] != '1' && tok[0] != '2'))
                throw std::invalid_argument("malformed composition: '" + std::string(text) + "'");
            parts.push_back(tok[0] - '0');
            if (next == std::string_view::npos) break;
            pos = next + 1;
        }
        return Composition(std::move(parts));
    }

private:
    std::vector<int> parts_;
};

// Positional data for the standard parabolic attached to a composition.
class ParabolicDatum {
public:
    explicit ParabolicDatum(Composition comp) : comp_(std::move(comp)) {
        int pos = 1;
        for (int i = 1; i <= comp_.blocks(); ++i) {
            a_.push_back(pos);
            int size = comp_.part(i);
            b_.push_back(size == 2 ? pos + 1 : 0);
            if (size == 2) delta_.insert(pos);
            for (int s = 0; s < size; ++s) block_of_.push_back(i);
            pos += size;
        }
    }

    const Composition& comp() const { return comp_; }
    int n() const { return comp_.n(); }
    int total() const { return comp_.total(); }
    int blocks() const { return comp_.blocks(); }

    // First position of block i.
    int a(int i) const { return a_.at(static_cast<std::size_t>(i - 1)); }
    // Second position of block i; only meaningful for 2-blocks.
    int b(int i) const {
        int v = b_.at(static_cast<std::size_t>(i - 1));
        if (v == 0) throw std::logic_error("b position requested for a 1-block");
        return v;
    }
    bool has_b(int i) const { return b_.at(static_cast<std::size_t>(i - 1)) != 0; }

    // Block index of a position m in 1..2n.
    int block_of(int m) const { return block_of_.at(static_cast<std::size_t>(m - 1)); }

    bool is_a_position(int m) const { return a(block_of(m)) == m; }

    // Indices d with alpha_d a simple root of the Levi.
    const std::set<int>& delta() const { return delta_; }

    bool in_delta(int d) const { return delta_.count(d) != 0; }

private:
    Composition comp_;
    std::vector<int> a_;
    std::vector<int> b_;
    std::vector<int> block_of_;
    std::set<int> delta_;
};

} // namespace shalika
