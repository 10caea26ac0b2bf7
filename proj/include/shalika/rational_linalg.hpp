#pragma once

// Exact rank computation over Q for integer vectors.
//
// Vectors are reduced incrementally against a row-echelon basis using
// cross-multiplication, so no fractions ever appear; rows are divided by
// their gcd to keep entries small. All products run through 128-bit
// intermediates and overflow is refused rather than wrapped.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "shalika/rational.hpp"

namespace shalika {

class RowSpace {
public:
    explicit RowSpace(int dim) : dim_(dim) {
        if (dim <= 0) throw std::invalid_argument("row space dimension must be positive");
    }

    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    // Reduce v against the basis; if independent, absorb it and return true.
    bool insert(std::vector<std::int64_t> v) {
        if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("vector dimension mismatch");
        for (const auto& row : rows_) {
            std::size_t lead = lead_of(row);
            if (v[lead] == 0) continue;
            eliminate(v, row, lead);
        }
        std::size_t lead = 0;
        while (lead < v.size() && v[lead] == 0) ++lead;
        if (lead == v.size()) return false;
        divide_by_gcd(v);
        // Keep rows ordered by leading index so a single pass suffices.
        auto it = rows_.begin();
        while (it != rows_.end() && lead_of(*it) < lead) ++it;
        rows_.insert(it, std::move(v));
        return true;
    }

    bool contains(std::vector<std::int64_t> v) const {
        if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("vector dimension mismatch");
        for (const auto& row : rows_) {
            std::size_t lead = lead_of(row);
            if (v[lead] == 0) continue;
            eliminate(v, row, lead);
        }
        for (auto x : v)
            if (x != 0) return false;
        return true;
    }

private:
    static std::size_t lead_of(const std::vector<std::int64_t>& row) {
        std::size_t lead = 0;
        while (lead < row.size() && row[lead] == 0) ++lead;
        return lead;
    }

    // v := pivot_lead * v - v_lead * pivot, then strip the gcd.
    static void eliminate(std::vector<std::int64_t>& v, const std::vector<std::int64_t>& pivot,
                          std::size_t lead) {
        std::int64_t pl = pivot[lead];
        std::int64_t vl = v[lead];
        for (std::size_t i = 0; i < v.size(); ++i) {
            __int128 t = static_cast<__int128>(pl) * v[i] - static_cast<__int128>(vl) * pivot[i];
            v[i] = detail::narrow_checked(t);
        }
        divide_by_gcd(v);
    }

    static void divide_by_gcd(std::vector<std::int64_t>& v) {
        std::int64_t g = 0;
        for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
        if (g > 1)
            for (auto& x : v) x /= g;
    }

    int dim_;
    std::vector<std::vector<std::int64_t>> rows_;
};

} // namespace shalika
