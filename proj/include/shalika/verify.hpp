#pragma once

// Self-check suites: each recomputes a structural fact by an independent
// route (brute-force scans, backtracking matchers, dimension counts) and
// compares against the production code. The command line "verify"
// subcommand and the release gate both run these.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "shalika/engine.hpp"
#include "shalika/langlands.hpp"
#include "shalika/orbits.hpp"

namespace shalika {

struct SuiteResult {
    std::string name;
    long checks = 0;
    std::vector<std::string> failures; // first few counterexamples

    bool passed() const { return failures.empty(); }
};

namespace detail {

class Suite {
  public:
    explicit Suite(std::string name) { res_.name = std::move(name); }

    void check(bool ok, const std::string& what) {
        ++res_.checks;
        if (!ok && res_.failures.size() < 8) res_.failures.push_back(what);
    }

    SuiteResult take() { return std::move(res_); }

  private:
    SuiteResult res_;
};

} // namespace detail

// All compositions of `total` into parts 1 and 2, in lexicographic order.
inline std::vector<Composition> all_compositions(int total) {
    std::vector<Composition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = 1; p <= 2 && p <= rest; ++p) {
            cur.push_back(p);
            self(self, rest - p);
            cur.pop_back();
        }
    };
    rec(rec, total);
    return out;
}

// Classified orbits computed once per composition.
class OrbitCache {
  public:
    const std::vector<OrbitDescriptor>& orbits(const Composition& comp) {
        auto it = cache_.find(comp.str());
        if (it != cache_.end()) return it->second;
        ParabolicDatum P(comp);
        return cache_.emplace(comp.str(), classified_orbits(P)).first->second;
    }

  private:
    std::map<std::string, std::vector<OrbitDescriptor>> cache_;
};

// --- seeded corpus -------------------------------------------------------

inline GaussRat corpus_lambda(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> imag(0, 9);
    Rat re(num(rng), 6);
    Rat im(0);
    if (imag(rng) == 0) im = Rat(num(rng), 2);
    return GaussRat(re, im);
}

inline MultChar corpus_eta(std::mt19937& rng, ArchField field) {
    std::uniform_int_distribution<int> kdist(field == ArchField::Real ? 0 : -3,
                                             field == ArchField::Real ? 1 : 3);
    return MultChar(field, kdist(rng), corpus_lambda(rng));
}

// A random standard module of the given shape; 2-blocks get discrete
// series with k in 1..4, 1-blocks get characters.
inline StandardModule corpus_module(const Composition& comp, std::mt19937& rng) {
    std::uniform_int_distribution<int> kd(1, 4);
    std::uniform_int_distribution<int> kc(0, 1);
    std::vector<CuspidalFactor> fs;
    for (int i = 1; i <= comp.blocks(); ++i) {
        if (comp.part(i) == 2)
            fs.push_back(CuspidalFactor::disc(kd(rng), corpus_lambda(rng)));
        else
            fs.push_back(
                CuspidalFactor::character(MultChar(ArchField::Real, kc(rng), corpus_lambda(rng))));
    }
    return StandardModule::normalized(ArchField::Real, std::move(fs));
}

// A module with strictly decreasing exponents, so normalization keeps the
// block order and the shape survives.
inline StandardModule corpus_sorted_module(const Composition& comp, std::mt19937& rng) {
    int r = comp.blocks();
    std::uniform_int_distribution<int> num(-30, 30);
    std::set<int> nums;
    while (static_cast<int>(nums.size()) < r) nums.insert(num(rng));
    std::vector<int> sorted(nums.begin(), nums.end());
    std::reverse(sorted.begin(), sorted.end());
    std::uniform_int_distribution<int> kd(1, 4);
    std::uniform_int_distribution<int> kc(0, 1);
    std::uniform_int_distribution<int> imag(0, 9);
    std::vector<CuspidalFactor> fs;
    for (int i = 1; i <= r; ++i) {
        Rat im = imag(rng) == 0 ? Rat(num(rng), 2) : Rat(0);
        GaussRat lam(Rat(sorted[static_cast<std::size_t>(i - 1)], 6), im);
        fs.push_back(comp.part(i) == 2
                         ? CuspidalFactor::disc(kd(rng), lam)
                         : CuspidalFactor::character(MultChar(ArchField::Real, kc(rng), lam)));
    }
    return StandardModule(ArchField::Real, std::move(fs));
}

// A module built to be eta-symplectic: blocks are grouped by a random
// size-preserving involution (fixed points only on 2-blocks) and factors
// are filled in so paired blocks carry twisted-dual factors and fixed
// blocks carry central character eta.
inline StandardModule corpus_symplectic_module(const Composition& comp, const MultChar& eta,
                                               std::mt19937& rng) {
    int r = comp.blocks();
    std::vector<int> ones, twos;
    for (int i = 1; i <= r; ++i) (comp.part(i) == 1 ? ones : twos).push_back(i);
    std::shuffle(ones.begin(), ones.end(), rng);
    std::shuffle(twos.begin(), twos.end(), rng);

    std::vector<int> s(static_cast<std::size_t>(r) + 1, 0);
    for (std::size_t t = 0; t + 1 < ones.size(); t += 2) {
        s[static_cast<std::size_t>(ones[t])] = ones[t + 1];
        s[static_cast<std::size_t>(ones[t + 1])] = ones[t];
    }
    std::uniform_int_distribution<int> coin(0, 1);
    std::size_t t = 0;
    while (t + 1 < twos.size()) {
        if (coin(rng) == 1) {
            s[static_cast<std::size_t>(twos[t])] = twos[t + 1];
            s[static_cast<std::size_t>(twos[t + 1])] = twos[t];
            t += 2;
        } else {
            s[static_cast<std::size_t>(twos[t])] = twos[t];
            t += 1;
        }
    }
    for (; t < twos.size(); ++t) s[static_cast<std::size_t>(twos[t])] = twos[t];

    std::uniform_int_distribution<int> kd(1, 4);
    std::uniform_int_distribution<int> kc(0, 1);
    std::vector<CuspidalFactor> fs(static_cast<std::size_t>(r), CuspidalFactor::disc(1, GaussRat()));
    for (int i = 1; i <= r; ++i) {
        int j = s[static_cast<std::size_t>(i)];
        if (j == i) {
            // central character sgn^{k+1} |.|^{2 lambda} must equal eta
            std::int64_t k = (eta.k() % 2) + 1 + 2 * ((kd(rng) - 1) / 2);
            fs[static_cast<std::size_t>(i - 1)] =
                CuspidalFactor::disc(k, eta.lambda() * GaussRat(Rat(1, 2)));
        } else if (j > i) {
            CuspidalFactor f = comp.part(i) == 2
                                   ? CuspidalFactor::disc(kd(rng), corpus_lambda(rng))
                                   : CuspidalFactor::character(
                                         MultChar(ArchField::Real, kc(rng), corpus_lambda(rng)));
            fs[static_cast<std::size_t>(j - 1)] = f;
            fs[static_cast<std::size_t>(i - 1)] = dual_twist(f, eta);
        }
    }
    return StandardModule::normalized(ArchField::Real, std::move(fs));
}

// --- suite 1: Bruhat factorization --------------------------------------

namespace detail {

inline std::vector<Perm> all_perms(int m) {
    std::vector<int> v(static_cast<std::size_t>(m));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Perm> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

// Membership in the double-coset representative set, checked from the
// definitions with no shortcuts.
inline bool brute_gamma_ok(const Perm& g, const ParabolicDatum& P) {
    int n = P.comp().n();
    Perm gi = g.inverse();
    for (int k = 1; k < n; ++k)
        if (g(k) > g(k + 1)) return false;
    for (int k = n + 1; k < 2 * n; ++k)
        if (g(k) > g(k + 1)) return false;
    for (int d : P.delta())
        if (gi(d) > gi(d + 1)) return false;
    return true;
}

inline bool brute_sigma_ok(const Perm& s, const Perm& g, const ParabolicDatum& P) {
    int n = P.comp().n();
    Perm gi = g.inverse();
    Perm si = s.inverse();
    for (int d : P.delta()) {
        int p = gi(d);
        if (p <= n - 1 && gi(d + 1) == p + 1 && si(p) > si(p + 1)) return false;
        if (p >= n + 1 && p <= 2 * n - 1 && gi(d + 1) == p + 1 && s(p - n) > s(p - n + 1))
            return false;
    }
    return true;
}

} // namespace detail

inline SuiteResult verify_factorization(int max2n) {
    detail::Suite suite("factorization");
    for (int m = 2; m <= max2n; m += 2) {
        auto big = detail::all_perms(m);
        auto small = detail::all_perms(m / 2);
        for (const auto& comp : all_compositions(m)) {
            ParabolicDatum P(comp);
            std::map<std::string, int> brute;
            for (const auto& g : big) {
                if (!detail::brute_gamma_ok(g, P)) continue;
                for (const auto& s : small) {
                    if (!detail::brute_sigma_ok(s, g, P)) continue;
                    Perm w = g * Perm::embed_first(s, m);
                    ++brute[w.str()];
                }
            }
            std::map<std::string, int> fast;
            for (const auto& d : enumerate_omega(P)) ++fast[d.omega.str()];
            suite.check(brute == fast, "factorization mismatch for " + comp.str());
            for (const auto& kv : brute)
                suite.check(kv.second == 1,
                            "non-unique factorization for " + kv.first + " in " + comp.str());
            if (m <= 6) {
                for (const auto& w : big) {
                    bool member = brute.count(w.str()) > 0;
                    bool accepted = true;
                    try {
                        classify(w, P);
                    } catch (const std::invalid_argument&) {
                        accepted = false;
                    }
                    suite.check(member == accepted,
                                "membership check disagrees at " + w.str() + " in " + comp.str());
                }
            }
        }
    }
    return suite.take();
}

// --- suite 2: orbit lemmas -----------------------------------------------

inline SuiteResult verify_orbit_lemmas(int max2n, OrbitCache& cache) {
    detail::Suite suite("orbit-lemmas");
    for (int m = 2; m <= max2n; m += 2) {
        int n = m / 2;
        for (const auto& comp : all_compositions(m)) {
            for (const auto& d : cache.orbits(comp)) {
                std::string tag = comp.str() + " omega=" + d.omega.str();
                RootSet uni;
                for (const auto& r : d.psi.wh) uni.insert(r);
                for (const auto& r : d.psi.ma) uni.insert(r);
                for (const auto& r : d.psi.um) uni.insert(r);
                suite.check(uni == d.psi.psi &&
                                d.psi.wh.size() + d.psi.ma.size() + d.psi.um.size() ==
                                    d.psi.psi.size(),
                            "psi pieces do not partition psi at " + tag);
                for (const auto& r : d.psi.wh)
                    suite.check(r.second == r.first + n, "bad whittaker root at " + tag);
                for (const auto& r : d.psi.ma) {
                    auto flip = [n](int x) { return x <= n ? x + n : x - n; };
                    suite.check(d.psi.ma.count({flip(r.first), flip(r.second)}) > 0,
                                "ma piece not swap-stable at " + tag);
                }
                if (d.cls == OrbitClass::PsiVanishing) continue;
                for (const auto& r : d.psi.psi) {
                    if (r.first <= n && r.second > n)
                        suite.check(r.first <= r.second - n, "mixed psi root fails i<=j at " + tag);
                    if (r.first > n && r.second == r.first + 1) {
                        int k = r.first - n;
                        if (k <= n - 1)
                            suite.check(d.omega(k) < d.omega(k + 1),
                                        "simple root not alive at " + tag);
                    }
                }
                for (const auto& unit : d.conormal) {
                    int j = unit.first > n ? unit.first - n : unit.first;
                    int i = unit.second;
                    suite.check(d.omega(i) < d.omega(j) && d.omega(n + i) < d.omega(n + j),
                                "derivative pair order fails at " + tag);
                }
                if (d.cls == OrbitClass::Matching) {
                    suite.check(d.psi.um.empty(), "matching orbit with um roots at " + tag);
                    int r = comp.blocks();
                    suite.check(static_cast<int>(d.s.size()) == r, "s has wrong size at " + tag);
                    for (int i = 1; i <= r; ++i) {
                        int j = d.s[static_cast<std::size_t>(i - 1)];
                        suite.check(j >= 1 && j <= r &&
                                        d.s[static_cast<std::size_t>(j - 1)] == i,
                                    "s not an involution at " + tag);
                        if (j == i)
                            suite.check(comp.part(i) == 2, "s fixes a 1-block at " + tag);
                        else
                            suite.check(comp.part(i) == comp.part(j),
                                        "s pairs blocks of different sizes at " + tag);
                    }
                } else {
                    suite.check(!d.psi.um.empty(), "unmatching orbit with no um roots at " + tag);
                }
            }
        }
    }
    return suite.take();
}

// --- suite 3: conormal dimension ----------------------------------------

// dim(p^omega + s) by counting, using that p^omega is a span of matrix
// units: a basis vector of s lies in p^omega exactly when each of its
// units does.
inline SuiteResult verify_conormal(int max2n, OrbitCache& cache) {
    detail::Suite suite("conormal");
    for (int m = 2; m <= max2n; m += 2) {
        int n = m / 2;
        for (const auto& comp : all_compositions(m)) {
            ParabolicDatum P(comp);
            for (const auto& d : cache.orbits(comp)) {
                if (d.cls == OrbitClass::PsiVanishing) continue;
                std::string tag = comp.str() + " omega=" + d.omega.str();
                auto in_p = [&](int row, int col) {
                    int u = d.omega(row), v = d.omega(col);
                    return u == v || P.block_of(u) <= P.block_of(v);
                };
                long dim_p = 0;
                for (int row = 1; row <= m; ++row)
                    for (int col = 1; col <= m; ++col)
                        if (in_p(row, col)) ++dim_p;
                long dim_s = 2L * n * n;
                long dim_cap = 0;
                for (int i = 1; i <= n; ++i)
                    for (int j = 1; j <= n; ++j) {
                        if (in_p(i, j) && in_p(n + i, n + j)) ++dim_cap;
                        if (in_p(i, n + j)) ++dim_cap;
                    }
                long expect = static_cast<long>(m) * m - (dim_p + dim_s - dim_cap);
                suite.check(static_cast<long>(d.conormal.size()) == expect,
                            "conormal dimension mismatch at " + tag);
            }
        }
    }
    return suite.take();
}

// --- suite 4: modulus characters ----------------------------------------

inline SuiteResult verify_modulus(int max2n, OrbitCache& cache) {
    detail::Suite suite("modulus");
    for (int m = 2; m <= max2n; m += 2) {
        for (const auto& comp : all_compositions(m)) {
            ParabolicDatum P(comp);
            for (const auto& d : cache.orbits(comp)) {
                if (d.cls == OrbitClass::PsiVanishing) continue;
                auto [lhs, rhs] = mod_char_vectors(d.omega, P);
                suite.check(tchar_square_equals(lhs, rhs),
                            "square identity fails at " + comp.str() + " omega=" + d.omega.str());
            }
        }
    }
    return suite.take();
}

// --- suite 5: relation closures -----------------------------------------

inline SuiteResult verify_relations(int max2n, unsigned seed, OrbitCache& cache) {
    detail::Suite suite("relations");
    std::mt19937 rng(seed ^ 0x52454cu);
    for (int m = 2; m <= max2n; m += 2) {
        int n = m / 2;
        for (const auto& comp : all_compositions(m)) {
            ParabolicDatum P(comp);
            std::vector<StandardModule> mods;
            for (int t = 0; t < 100; ++t) mods.push_back(corpus_sorted_module(comp, rng));
            for (const auto& d : cache.orbits(comp)) {
                if (d.cls == OrbitClass::PsiVanishing) continue;
                std::string tag = comp.str() + " omega=" + d.omega.str();
                RelationClosures rc = relation_closures(d.omega, P);
                suite.check(rc.weightly_base == d.lambda_um,
                            "weightly base differs from lambda_um at " + tag);
                auto increasing = [n](const std::set<std::pair<int, int>>& s) {
                    for (const auto& pr : s)
                        if (!(1 <= pr.first && pr.first < pr.second && pr.second <= n))
                            return false;
                    return true;
                };
                suite.check(increasing(rc.weightly) && increasing(rc.deriv),
                            "closure contains a non-increasing pair at " + tag);
                // closure is closed: chaining two members stays inside
                auto closed = [](const std::set<std::pair<int, int>>& s) {
                    for (const auto& a : s)
                        for (const auto& b : s)
                            if (a.second == b.first && s.count({a.first, b.second}) == 0)
                                return false;
                    return true;
                };
                suite.check(closed(rc.weightly) && closed(rc.deriv),
                            "closure not transitively closed at " + tag);
                for (const auto& pr : rc.weightly_base)
                    suite.check(rc.weightly.count(pr) > 0, "closure misses its base at " + tag);
                for (const auto& pr : rc.deriv_base)
                    suite.check(rc.deriv.count(pr) > 0, "closure misses its base at " + tag);
                // exponent inequality: along either association, the
                // pulled-back exponents never increase
                for (const auto& mod : mods) {
                    auto expo = [&](int pos) {
                        return mod.factor(P.block_of(d.omega(pos))).exponent();
                    };
                    for (const auto* clo : {&rc.weightly, &rc.deriv}) {
                        for (const auto& pr : *clo) {
                            Rat gap = expo(pr.first) + expo(n + pr.first) - expo(pr.second) -
                                      expo(n + pr.second);
                            suite.check(gap.sgn() >= 0, "negative exponent gap at " + tag);
                        }
                    }
                }
            }
        }
    }
    return suite.take();
}

// --- suite 6: symplectic classification ---------------------------------

namespace detail {

// Backtracking matcher: organize the parts into standalone det=eta planes
// and twisted-dual pairs, trying every branch.
inline bool brute_symplectic(std::vector<WeilIrr> parts, const MultChar& eta) {
    if (parts.empty()) return true;
    WeilIrr u = parts.front();
    std::vector<WeilIrr> rest(parts.begin() + 1, parts.end());
    if (u.is_two_dim() && det_two_dim(u) == eta && brute_symplectic(rest, eta)) return true;
    WeilIrr v = twist(dual(u), eta);
    for (std::size_t j = 0; j < rest.size(); ++j) {
        if (!(rest[j] == v)) continue;
        std::vector<WeilIrr> next = rest;
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(j));
        if (brute_symplectic(next, eta)) return true;
        break; // identical parts: one pairing branch suffices
    }
    return false;
}

inline WeilIrr corpus_part(std::mt19937& rng, ArchField field) {
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<int> lam(-4, 4);
    GaussRat lambda(Rat(lam(rng), 2));
    if (field == ArchField::Real && kind(rng) > 0) {
        std::uniform_int_distribution<int> kd(1, 3);
        return WeilIrr::two_dim(kd(rng), lambda);
    }
    std::uniform_int_distribution<int> kc(field == ArchField::Real ? 0 : -3,
                                          field == ArchField::Real ? 1 : 3);
    return WeilIrr::one_dim(MultChar(field, kc(rng), lambda));
}

} // namespace detail

inline SuiteResult verify_symplectic(unsigned seed) {
    detail::Suite suite("symplectic");
    std::mt19937 rng(seed ^ 0x53594du);
    std::uniform_int_distribution<int> nparts(1, 5);
    for (int t = 0; t < 400; ++t) {
        ArchField field = (t % 8 == 7) ? ArchField::Complex : ArchField::Real;
        MultChar eta = corpus_eta(rng, field);
        std::vector<WeilIrr> parts;
        int count = nparts(rng);
        if (t % 2 == 0) count = 1 + count % 2;
        for (int i = 0; i < count; ++i) parts.push_back(detail::corpus_part(rng, field));
        // half the time, force a positive by pairing the parts up
        if (t % 2 == 0) {
            std::vector<WeilIrr> forced;
            for (const auto& u : parts) {
                forced.push_back(u);
                forced.push_back(twist(dual(u), eta));
            }
            parts = forced;
        }
        LParameter phi(field, parts);
        if (phi.dim() > 10) continue;
        bool fast = is_symplectic_eta(phi, eta).value;
        bool brute = detail::brute_symplectic(phi.parts(), eta);
        suite.check(fast == brute, "symplectic decision disagrees with matcher at " + phi.str() +
                                       " eta=" + eta.str());
        std::vector<WeilIrr> shuffled = parts;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        suite.check(is_symplectic_eta(LParameter(field, shuffled), eta).value == fast,
                    "symplectic decision depends on part order at " + phi.str());
        if (fast) {
            auto dec = is_symplectic_eta(phi, eta);
            suite.check(!dec.pairing.empty() || phi.parts().empty(),
                        "positive decision without a pairing at " + phi.str());
            std::vector<int> used(phi.parts().size() + 1, 0);
            bool ok = true;
            for (const auto& pr : dec.pairing) {
                const WeilIrr& a = phi.parts()[static_cast<std::size_t>(pr.first - 1)];
                const WeilIrr& b = phi.parts()[static_cast<std::size_t>(pr.second - 1)];
                if (pr.first == pr.second) {
                    ++used[static_cast<std::size_t>(pr.first)];
                    if (!(a.is_two_dim() && det_two_dim(a) == eta)) ok = false;
                } else {
                    ++used[static_cast<std::size_t>(pr.first)];
                    ++used[static_cast<std::size_t>(pr.second)];
                    if (!(a == twist(dual(b), eta))) ok = false;
                }
            }
            for (std::size_t i = 1; i < used.size(); ++i)
                if (used[i] != 1) ok = false;
            suite.check(ok, "reported pairing is not a valid decomposition at " + phi.str());
        }
    }
    return suite.take();
}

// --- suite 7: existence equivalence -------------------------------------

inline SuiteResult verify_equivalence(int max2n, unsigned seed, OrbitCache& cache) {
    detail::Suite suite("equivalence");
    std::mt19937 rng(seed ^ 0x455155u);
    int positives = 0, negatives = 0;
    for (int m = 2; m <= max2n; m += 2) {
        for (const auto& comp : all_compositions(m)) {
            for (int t = 0; t < 12; ++t) {
                MultChar eta = corpus_eta(rng, ArchField::Real);
                bool planted = t % 2 == 0;
                StandardModule mod = planted ? corpus_symplectic_module(comp, eta, rng)
                                             : corpus_module(comp, rng);
                bool symp = is_symplectic_eta(langlands_param(mod), eta).value;
                (symp ? positives : negatives) += 1;
                if (planted)
                    suite.check(symp, "planted module is not symplectic: " + mod.str() +
                                          " eta=" + eta.str());
                bool orbit_side = false;
                // normalization may reorder blocks, so use the module's shape
                for (const auto& d : cache.orbits(mod.composition()))
                    if (d.cls == OrbitClass::Matching && compatible(d, mod, eta)) {
                        orbit_side = true;
                        break;
                    }
                suite.check(symp == orbit_side, "existence equivalence fails for " + mod.str() +
                                                    " eta=" + eta.str() + " shape=" + comp.str());
                // decision output must not depend on input factor order
                std::vector<CuspidalFactor> shuffled = mod.factors();
                std::shuffle(shuffled.begin(), shuffled.end(), rng);
                StandardModule again =
                    StandardModule::normalized(ArchField::Real, std::move(shuffled));
                ShalikaSpec spec(eta, Rat(1));
                PeriodReport r1 = shalika_decision(mod, spec, true);
                PeriodReport r2 = shalika_decision(again, spec, true);
                bool same = r1.necessary == r2.necessary &&
                            r1.matching_orbits == r2.matching_orbits &&
                            r1.compatible_orbits == r2.compatible_orbits &&
                            r1.verdict == r2.verdict &&
                            r1.witness.has_value() == r2.witness.has_value() &&
                            (!r1.witness || r1.witness->omega == r2.witness->omega);
                suite.check(same, "decision depends on factor order for " + mod.str());
            }
            // matching orbits realize each admissible involution once
            std::map<std::vector<int>, int> seen;
            for (const auto& d : cache.orbits(comp))
                if (d.cls == OrbitClass::Matching) ++seen[d.s];
            int r = comp.blocks();
            std::vector<int> s(static_cast<std::size_t>(r));
            std::iota(s.begin(), s.end(), 1);
            std::map<std::vector<int>, int> admissible;
            std::vector<int> perm = s;
            std::sort(perm.begin(), perm.end());
            do {
                bool ok = true;
                for (int i = 1; i <= r && ok; ++i) {
                    int j = perm[static_cast<std::size_t>(i - 1)];
                    if (perm[static_cast<std::size_t>(j - 1)] != i) ok = false;
                    else if (j == i && comp.part(i) != 2) ok = false;
                    else if (comp.part(i) != comp.part(j)) ok = false;
                }
                if (ok) admissible[perm] = 1;
            } while (std::next_permutation(perm.begin(), perm.end()));
            suite.check(seen == admissible,
                        "matching orbits do not biject with admissible involutions for " +
                            comp.str());
        }
    }
    int floor = 3 * (positives + negatives) / 8;
    suite.check(positives >= floor && negatives >= floor, "corpus is not balanced enough");
    return suite.take();
}

// --- suite 8: restriction sign ------------------------------------------

inline SuiteResult verify_epsilon(unsigned seed) {
    detail::Suite suite("epsilon");
    std::mt19937 rng(seed ^ 0x455053u);
    std::uniform_int_distribution<int> blocks(1, 4);
    int built = 0;
    while (built < 150) {
        int r = blocks(rng);
        std::vector<int> parts(static_cast<std::size_t>(r), 2);
        Composition comp(parts);
        MultChar eta = corpus_eta(rng, ArchField::Real);
        StandardModule mod = corpus_symplectic_module(comp, eta, rng);
        bool all_disc = true;
        for (const auto& f : mod.factors())
            if (!f.is_disc()) all_disc = false;
        if (!all_disc) continue;
        ++built;
        EpsilonReport plus, minus;
        try {
            plus = epsilon_pi(mod, ShalikaSpec(eta, Rat(1)));
            minus = epsilon_pi(mod, ShalikaSpec(eta, Rat(-1)));
        } catch (const std::exception& e) {
            suite.check(false, std::string("epsilon threw: ") + e.what() + " at " + mod.str());
            continue;
        }
        suite.check(plus.epsilon == 1 || plus.epsilon == -1, "epsilon out of range at " + mod.str());
        suite.check(plus.p == minus.p && plus.q == minus.q, "p,q depend on a at " + mod.str());
        suite.check((plus.p % 2 == 0) == (plus.epsilon == minus.epsilon),
                    "sign of a acts through parity of p at " + mod.str());
        suite.check((r - plus.p) % 2 == 0 && plus.q == (r - plus.p) / 2,
                    "q is not (n-p)/2 at " + mod.str());
        int independent = 1;
        for (int i = 0; i < plus.p * (plus.p - 1) / 2 + plus.q; ++i) independent = -independent;
        suite.check(plus.epsilon == independent, "epsilon formula mismatch at " + mod.str());
    }
    return suite.take();
}

// --- driver --------------------------------------------------------------

inline std::vector<SuiteResult> run_verification(int max_n, unsigned seed) {
    if (max_n < 1) throw std::invalid_argument("max-n must be at least 1");
    int max2n = 2 * max_n;
    OrbitCache cache;
    std::vector<SuiteResult> out;
    out.push_back(verify_factorization(max2n));
    out.push_back(verify_orbit_lemmas(max2n, cache));
    out.push_back(verify_conormal(max2n, cache));
    out.push_back(verify_modulus(max2n, cache));
    out.push_back(verify_relations(max2n, seed, cache));
    out.push_back(verify_symplectic(seed));
    out.push_back(verify_equivalence(max2n, seed, cache));
    out.push_back(verify_epsilon(seed));
    return out;
}

} // namespace shalika
