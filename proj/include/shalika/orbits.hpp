#pragma once

// Orbits of the Shalika subgroup on the partial flag manifold P\GL(2n),
// indexed by their Weyl representatives.
//
// Representatives factor as omega = gamma * sigma with gamma in the
// relative Weyl set for (P, (n,n)) and sigma a relative Weyl element of the
// symmetric group on the first n letters. Classification splits the
// pulled-back simple roots Psi = omega^{-1}(Delta_P) into wh / ma / um
// parts; an orbit supports the Shalika character iff every column pair
// (omega(k), omega(n+k)) is inverted or spans a Levi block, and it is
// "matching" when the um part is empty.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "shalika/parabolic.hpp"
#include "shalika/permutation.hpp"
#include "shalika/rational_linalg.hpp"
#include "shalika/torus_char.hpp"

namespace shalika {

using RootSet = std::set<Root>;

// Matrix-unit position E_{row,col}.
using MatrixUnit = std::pair<int, int>;

enum class OrbitClass { PsiVanishing, Matching, Unmatching };

inline std::string orbit_class_name(OrbitClass c) {
    switch (c) {
        case OrbitClass::PsiVanishing: return "PsiVanishing";
        case OrbitClass::Matching: return "Matching";
        case OrbitClass::Unmatching: return "Unmatching";
    }
    return "?";
}

// The split of Psi = omega^{-1}(Delta_P) into Whittaker-type roots
// alpha_{i,n+i}, roots stable under the outer swap iota, and the rest.
struct PsiSets {
    RootSet psi;
    RootSet wh;
    RootSet ma;
    RootSet um;
};

struct OrbitDescriptor {
    Composition comp;
    Perm omega;
    Perm gamma;
    Perm sigma; // permutation of {1..n}
    std::optional<OrbitClass> cls;
    PsiSets psi;
    std::vector<int> s;                // block involution, filled when Matching
    std::set<MatrixUnit> conormal;     // basis of N_omega, filled unless PsiVanishing
    std::set<std::pair<int, int>> lambda_um; // block pairs carrying um roots
    RootSet r_roots;
    RootSet v_roots;

    OrbitDescriptor(Composition c, Perm w, Perm g, Perm s_)
        : comp(std::move(c)), omega(std::move(w)), gamma(std::move(g)), sigma(std::move(s_)) {}

    int length() const { return omega.length(); }
};

// The swap of the two halves of {1..2n}.
inline Perm iota_perm(int n) {
    std::vector<int> v(static_cast<std::size_t>(2 * n));
    for (int k = 1; k <= n; ++k) {
        v[static_cast<std::size_t>(k - 1)] = n + k;
        v[static_cast<std::size_t>(n + k - 1)] = k;
    }
    return Perm(std::move(v));
}

// { w : w(Delta_2) and w^{-1}(Delta_1) both positive }. Elements are
// produced by choosing which values each Delta_2-run receives, so only
// run-increasing permutations are ever touched.
inline std::vector<Perm> relative_weyl_set(const std::set<int>& delta1, const std::set<int>& delta2,
                                           int m) {
    if (m < 1) throw std::invalid_argument("relative Weyl set needs m >= 1");
    for (int d : delta1)
        if (d < 1 || d >= m) throw std::invalid_argument("delta1 index out of range");
    for (int d : delta2)
        if (d < 1 || d >= m) throw std::invalid_argument("delta2 index out of range");

    // Positions i and i+1 share a run iff i is in delta2.
    std::vector<int> run_of(static_cast<std::size_t>(m));
    int run = 0;
    for (int i = 1; i <= m; ++i) {
        run_of[static_cast<std::size_t>(i - 1)] = run;
        if (!delta2.count(i)) ++run;
    }

    // labels[v-1] = run that receives the value v; start from the sorted
    // multiset so next_permutation walks every distinct assignment.
    std::vector<int> labels = run_of;
    std::sort(labels.begin(), labels.end());

    std::vector<Perm> out;
    do {
        std::vector<std::vector<int>> values(static_cast<std::size_t>(run));
        for (int v = 1; v <= m; ++v)
            values[static_cast<std::size_t>(labels[static_cast<std::size_t>(v - 1)])].push_back(v);
        std::vector<int> img(static_cast<std::size_t>(m));
        std::vector<int> used(static_cast<std::size_t>(run), 0);
        for (int pos = 1; pos <= m; ++pos) {
            int r = run_of[static_cast<std::size_t>(pos - 1)];
            img[static_cast<std::size_t>(pos - 1)] =
                values[static_cast<std::size_t>(r)][static_cast<std::size_t>(used[static_cast<std::size_t>(r)]++)];
        }
        Perm w(std::move(img));
        Perm winv = w.inverse();
        bool ok = true;
        for (int d : delta1)
            if (winv(d) > winv(d + 1)) { ok = false; break; }
        if (ok) out.push_back(std::move(w));
    } while (std::next_permutation(labels.begin(), labels.end()));

    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

// Simple-root index sets of the two intersection parabolics attached to
// gamma: gamma^{-1}(Delta_P) meets the simple roots of the first and
// second n letters.
inline std::pair<std::set<int>, std::set<int>> sigma_deltas(const Perm& gamma,
                                                            const ParabolicDatum& P) {
    Perm ginv = gamma.inverse();
    int n = P.n();
    std::set<int> d1, d2;
    for (int d : P.delta()) {
        int p = ginv(d);
        int q = ginv(d + 1);
        if (q != p + 1) continue;
        if (p <= n - 1) d1.insert(p);
        else if (p >= n + 1 && p <= 2 * n - 1) d2.insert(p - n);
    }
    return {d1, d2};
}

} // namespace detail

// All orbit representatives omega = gamma * sigma, in a fixed order.
inline std::vector<OrbitDescriptor> enumerate_omega(const ParabolicDatum& P) {
    int n = P.n();
    int m = 2 * n;
    std::set<int> delta_q;
    for (int i = 1; i < m; ++i)
        if (i != n) delta_q.insert(i);

    std::vector<OrbitDescriptor> out;
    for (const Perm& gamma : relative_weyl_set(P.delta(), delta_q, m)) {
        auto [d1, d2] = detail::sigma_deltas(gamma, P);
        for (const Perm& sigma : relative_weyl_set(d1, d2, n)) {
            Perm omega = gamma * Perm::embed_first(sigma, m);
            out.emplace_back(P.comp(), std::move(omega), gamma, sigma);
        }
    }
    return out;
}

// Shalika-character support test for an orbit: each pair of columns must
// either be inverted or pull back a Levi simple root.
inline bool psi_unvanishing(const Perm& omega, const ParabolicDatum& P) {
    int n = P.n();
    for (int k = 1; k <= n; ++k) {
        int u = omega(k);
        int v = omega(n + k);
        if (u > v) continue;
        if (v == u + 1 && P.in_delta(u)) continue;
        return false;
    }
    return true;
}

inline PsiSets compute_psi_sets(const Perm& omega, const ParabolicDatum& P) {
    int n = P.n();
    Perm winv = omega.inverse();
    PsiSets s;
    for (int d : P.delta()) s.psi.insert({winv(d), winv(d + 1)});
    auto iota = [n](int x) { return x <= n ? x + n : x - n; };
    for (const Root& r : s.psi) {
        if (r.second == r.first + n) {
            s.wh.insert(r);
        } else if (s.psi.count({iota(r.first), iota(r.second)})) {
            s.ma.insert(r);
        } else {
            s.um.insert(r);
        }
    }
    return s;
}

// The block involution of a matching orbit: pairs a-columns, fixes blocks
// whose a and b columns sit over each other, and cross-checks b-columns.
inline std::vector<int> s_omega(const Perm& omega, const ParabolicDatum& P) {
    int n = P.n();
    int r = P.blocks();
    std::vector<int> s(static_cast<std::size_t>(r + 1), 0);
    auto bad = [](const std::string& what) {
        throw std::logic_error("matching orbit has an inconsistent block involution: " + what);
    };
    auto assign = [&](int i, int j) {
        if (s[static_cast<std::size_t>(i)] != 0 && s[static_cast<std::size_t>(i)] != j)
            bad("block " + std::to_string(i) + " paired twice");
        s[static_cast<std::size_t>(i)] = j;
    };
    for (int k = 1; k <= n; ++k) {
        int u = omega(k);
        int v = omega(n + k);
        if (!P.is_a_position(u)) continue;
        int i = P.block_of(u);
        int j = P.block_of(v);
        if (P.is_a_position(v)) {
            assign(i, j);
            assign(j, i);
        } else {
            if (j != i) bad("a-column of block " + std::to_string(i) + " over a foreign b-column");
            assign(i, i);
        }
    }
    for (int k = 1; k <= n; ++k) {
        int u = omega(k);
        int v = omega(n + k);
        if (P.is_a_position(u)) continue;
        int i = P.block_of(u);
        int si = s[static_cast<std::size_t>(i)];
        if (si == 0) bad("b-column of block " + std::to_string(i) + " with no pairing");
        if (!P.has_b(si) || v != P.b(si))
            bad("b-column of block " + std::to_string(i) + " not over b of its partner");
    }
    for (int i = 1; i <= r; ++i) {
        int si = s[static_cast<std::size_t>(i)];
        if (si == 0) bad("block " + std::to_string(i) + " unpaired");
        if (s[static_cast<std::size_t>(si)] != i) bad("not an involution");
        if (P.comp().part(i) != P.comp().part(si)) bad("paired blocks of different size");
        if (si == i && P.comp().part(i) != 2) bad("fixed block of size one");
    }
    return std::vector<int>(s.begin() + 1, s.end());
}

// Basis of the conormal directions N_omega, as matrix-unit positions. The
// defining span conditions are checked against an exact rank computation:
// N_omega must complement p^omega + s in gl(2n).
inline std::set<MatrixUnit> conormal_basis(const Perm& omega, const ParabolicDatum& P) {
    int n = P.n();
    if (!psi_unvanishing(omega, P))
        throw std::invalid_argument("conormal basis is defined for psi-unvanishing orbits");
    PsiSets psi = compute_psi_sets(omega, P);

    std::set<MatrixUnit> N;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (omega(i) < omega(n + j) && !psi.psi.count({i, n + j})) N.insert({n + j, i});
            if (omega(i) < omega(j) && !psi.psi.count({i, j}) && !psi.psi.count({n + i, n + j}))
                N.insert({j, i});
        }
    }

    // Direct-sum verification over Q.
    int m = 2 * n;
    int dim = m * m;
    auto evec = [&](int row, int col) {
        std::vector<std::int64_t> v(static_cast<std::size_t>(dim), 0);
        v[static_cast<std::size_t>((row - 1) * m + (col - 1))] = 1;
        return v;
    };
    RowSpace space(dim);
    Perm winv = omega.inverse();
    for (int u = 1; u <= m; ++u)
        for (int v = 1; v <= m; ++v)
            if (u == v || P.block_of(u) <= P.block_of(v)) space.insert(evec(winv(u), winv(v)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            auto vec = evec(i, j);
            vec[static_cast<std::size_t>((n + i - 1) * m + (n + j - 1))] = 1;
            space.insert(std::move(vec));
            space.insert(evec(i, n + j));
        }
    if (static_cast<int>(N.size()) + space.rank() != dim)
        throw std::logic_error("conormal count does not complement p^omega + s");
    for (const auto& [row, col] : N)
        if (!space.insert(evec(row, col)))
            throw std::logic_error("conormal direction meets p^omega + s");
    return N;
}

// Block pairs (i,j), i<j, carrying an um root in any of its three guises.
inline std::set<std::pair<int, int>> lambda_um_pairs(const Perm& omega, const ParabolicDatum& P) {
    int n = P.n();
    PsiSets psi = compute_psi_sets(omega, P);
    std::set<std::pair<int, int>> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (psi.um.count({i, j}) || psi.um.count({i, n + j}) || psi.um.count({n + i, n + j}))
                out.insert({i, j});
    return out;
}

// Left side: the modulus character of P^omega cap S on its torus, built
// from the inverted pairs, the ma simple roots, and the mixed pairs.
// Right side: the omega-conjugated modulus character of P times the um
// correction, restricted to x_{n+i} = x_i. The lemma being encoded says
// lhs^2 = rhs as absolute-value characters.
inline std::pair<TorusCharVec, TorusCharVec> mod_char_vectors(const Perm& omega,
                                                              const ParabolicDatum& P) {
    int n = P.n();
    if (!psi_unvanishing(omega, P))
        throw std::invalid_argument("modulus comparison is defined for psi-unvanishing orbits");
    PsiSets psi = compute_psi_sets(omega, P);
    auto coord = [n](int m) { return ((m - 1) % n) + 1; };

    TorusCharVec lhs(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (omega(i) < omega(j)) lhs.mul_root(i, j);         // inverted pairs, first half
            if (omega(i) < omega(n + j)) lhs.mul_root(i, j);     // mixed pairs
        }
    for (const Root& r : psi.ma)
        if (r.first <= n && r.second == r.first + 1)
            lhs.mul_root(coord(r.first), coord(r.second), -1);

    TorusCharVec rhs(n);
    Perm winv = omega.inverse();
    int m = 2 * n;
    for (int u = 1; u <= m; ++u)
        for (int v = u + 1; v <= m; ++v) rhs.mul_root(coord(winv(u)), coord(winv(v)));
    for (int d : P.delta()) rhs.mul_root(coord(winv(d)), coord(winv(d + 1)), -1);
    for (const Root& r : psi.um) rhs.mul_root(coord(r.first), coord(r.second));

    return {lhs, rhs};
}

// Base relations between blocks and their chain closures. Weightly related
// pairs are the um pairs; derivatively related pairs come from conormal
// directions in the first column block. Chains are strictly increasing.
struct RelationClosures {
    std::set<std::pair<int, int>> weightly_base;
    std::set<std::pair<int, int>> weightly;
    std::set<std::pair<int, int>> deriv_base;
    std::set<std::pair<int, int>> deriv;
};

namespace detail {

inline std::set<std::pair<int, int>> chain_closure(const std::set<std::pair<int, int>>& base, int n) {
    std::vector<std::vector<char>> reach(static_cast<std::size_t>(n + 1),
                                         std::vector<char>(static_cast<std::size_t>(n + 1), 0));
    for (const auto& [i, j] : base) reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
    for (int mid = 1; mid <= n; ++mid)
        for (int i = 1; i < mid; ++i)
            for (int j = mid + 1; j <= n; ++j)
                if (reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(mid)] &&
                    reach[static_cast<std::size_t>(mid)][static_cast<std::size_t>(j)])
                    reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
    std::set<std::pair<int, int>> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) out.insert({i, j});
    return out;
}

} // namespace detail

inline RelationClosures relation_closures(const Perm& omega, const ParabolicDatum& P) {
    int n = P.n();
    RelationClosures rc;
    rc.weightly_base = lambda_um_pairs(omega, P);
    for (const auto& [row, col] : conormal_basis(omega, P)) {
        int j = row > n ? row - n : row;
        rc.deriv_base.insert({col, j});
    }
    rc.weightly = detail::chain_closure(rc.weightly_base, n);
    rc.deriv = detail::chain_closure(rc.deriv_base, n);
    return rc;
}

// Root supports of the two factors of P^omega cap S = R_omega |x V_omega.
// R_omega holds the diagonal reductive pairs and the Levi part of the
// unipotent wing; V_omega holds everything else.
struct GroupDecomposition {
    RootSet r_roots;
    RootSet v_roots;
};

inline GroupDecomposition group_decomposition(const Perm& omega, const ParabolicDatum& P) {
    int n = P.n();
    if (!psi_unvanishing(omega, P))
        throw std::invalid_argument("group decomposition is defined for psi-unvanishing orbits");
    GroupDecomposition g;
    auto blk = [&](int x) { return P.block_of(omega(x)); };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            bool in_pair = blk(i) <= blk(j) && blk(n + i) <= blk(n + j);
            bool sym = blk(i) == blk(j) && blk(n + i) == blk(n + j);
            if (sym) {
                g.r_roots.insert({i, j});
                g.r_roots.insert({n + i, n + j});
            } else if (in_pair) {
                g.v_roots.insert({i, j});
                g.v_roots.insert({n + i, n + j});
            }
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (blk(i) > blk(n + j)) continue;
            if (i == j) {
                // For a supporting orbit an aligned column pair lies in the
                // Levi, never strictly above it.
                if (blk(i) == blk(n + i)) g.r_roots.insert({i, n + i});
                else g.v_roots.insert({i, n + i});
            } else {
                g.v_roots.insert({i, n + j});
            }
        }
    return g;
}

// Full classification of one representative. Validates that omega really
// is one, then fills every derived field.
inline OrbitDescriptor classify(const Perm& omega, const ParabolicDatum& P) {
    int n = P.n();
    int m = 2 * n;
    if (omega.size() != m) throw std::invalid_argument("representative has the wrong degree");

    // Recover the factorization: gamma sorts the first-half values, sigma
    // is what remains on the first n letters.
    for (int k = n + 1; k < m; ++k)
        if (omega(k) > omega(k + 1))
            throw std::invalid_argument("not an orbit representative: second half not increasing");
    std::vector<int> first_half;
    for (int k = 1; k <= n; ++k) first_half.push_back(omega(k));
    std::sort(first_half.begin(), first_half.end());
    std::vector<int> gimg = first_half;
    for (int k = n + 1; k <= m; ++k) gimg.push_back(omega(k));
    Perm gamma(std::move(gimg));
    Perm ginv = gamma.inverse();
    for (int d : P.delta())
        if (ginv(d) > ginv(d + 1))
            throw std::invalid_argument("not an orbit representative: gamma fails the Levi condition");
    Perm sigma = (ginv * omega).restrict_first(n);
    auto [d1, d2] = detail::sigma_deltas(gamma, P);
    Perm sinv = sigma.inverse();
    for (int d : d2)
        if (sigma(d) > sigma(d + 1))
            throw std::invalid_argument("not an orbit representative: sigma fails the right condition");
    for (int d : d1)
        if (sinv(d) > sinv(d + 1))
            throw std::invalid_argument("not an orbit representative: sigma fails the left condition");

    OrbitDescriptor desc(P.comp(), omega, gamma, sigma);
    desc.psi = compute_psi_sets(omega, P);
    if (!psi_unvanishing(omega, P)) {
        desc.cls = OrbitClass::PsiVanishing;
        return desc;
    }
    desc.cls = desc.psi.um.empty() ? OrbitClass::Matching : OrbitClass::Unmatching;
    if (desc.cls == OrbitClass::Matching) desc.s = s_omega(omega, P);
    desc.conormal = conormal_basis(omega, P);
    desc.lambda_um = lambda_um_pairs(omega, P);
    GroupDecomposition g = group_decomposition(omega, P);
    desc.r_roots = std::move(g.r_roots);
    desc.v_roots = std::move(g.v_roots);
    return desc;
}

// Classified descriptors in report order: Bruhat length descending, then
// one-line form ascending.
inline std::vector<OrbitDescriptor> classified_orbits(const ParabolicDatum& P) {
    std::vector<OrbitDescriptor> out;
    for (const auto& d : enumerate_omega(P)) out.push_back(classify(d.omega, P));
    std::sort(out.begin(), out.end(), [](const OrbitDescriptor& a, const OrbitDescriptor& b) {
        int la = a.omega.length();
        int lb = b.omega.length();
        if (la != lb) return la > lb;
        return a.omega < b.omega;
    });
    return out;
}

} // namespace shalika
