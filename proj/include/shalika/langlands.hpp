#pragma once

// Archimedean multiplicative characters, Weil group irreducibles,
// L-parameters, and standard modules for GL over R and C.
//
// Characters of R^x are sgn^k |.|^lambda with k in {0,1}; characters of C^x
// are (z/|z|)^k |z|^lambda with k any integer. The two-dimensional Weil
// irreducibles sigma_{k,lambda} (k >= 1) are induced from C^x and only
// exist over R; sigma_{-k,lambda} is isomorphic to sigma_{k,lambda}, so k
// is normalized positive. A parameter is a multiset of irreducibles, kept
// here as a canonically sorted list.

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "shalika/gauss_rational.hpp"
#include "shalika/parabolic.hpp"
#include "shalika/rational.hpp"

namespace shalika {

enum class ArchField { Real, Complex };

inline std::string field_name(ArchField f) { return f == ArchField::Real ? "R" : "C"; }

class MultChar {
public:
    MultChar(ArchField field, std::int64_t k, GaussRat lambda)
        : field_(field), k_(field == ArchField::Real ? ((k % 2) + 2) % 2 : k), lambda_(lambda) {}

    static MultChar trivial(ArchField field) { return MultChar(field, 0, GaussRat()); }

    ArchField field() const { return field_; }
    std::int64_t k() const { return k_; }
    const GaussRat& lambda() const { return lambda_; }

    // The real part of lambda drives all ordering decisions.
    Rat exponent() const { return lambda_.re(); }

    friend MultChar operator*(const MultChar& a, const MultChar& b) {
        a.check_field(b);
        return MultChar(a.field_, a.k_ + b.k_, a.lambda_ + b.lambda_);
    }

    MultChar inverse() const {
        return MultChar(field_, field_ == ArchField::Real ? k_ : -k_, -lambda_);
    }

    friend bool operator==(const MultChar& a, const MultChar& b) {
        return a.field_ == b.field_ && a.k_ == b.k_ && a.lambda_ == b.lambda_;
    }
    friend bool operator!=(const MultChar& a, const MultChar& b) { return !(a == b); }
    friend bool operator<(const MultChar& a, const MultChar& b) {
        return std::tie(a.field_, a.k_, a.lambda_) < std::tie(b.field_, b.k_, b.lambda_);
    }

    std::string str() const {
        return "chi(" + std::to_string(k_) + "," + lambda_.str() + ")" +
               (field_ == ArchField::Complex ? "_C" : "");
    }

    friend std::ostream& operator<<(std::ostream& os, const MultChar& c) { return os << c.str(); }

private:
    void check_field(const MultChar& o) const {
        if (field_ != o.field_) throw std::invalid_argument("characters over different fields");
    }

    ArchField field_;
    std::int64_t k_;
    GaussRat lambda_;
};

// The contragredient of a character is its inverse.
inline MultChar dual(const MultChar& c) { return c.inverse(); }

// An irreducible representation of the Weil group: a character of the field
// itself, or (over R only) the induced sigma_{k,lambda} with k >= 1.
class WeilIrr {
public:
    enum class Kind { OneDim, TwoDim };

    static WeilIrr one_dim(MultChar chi) {
        WeilIrr w;
        w.kind_ = Kind::OneDim;
        w.chi_ = std::move(chi);
        return w;
    }

    static WeilIrr two_dim(std::int64_t k, GaussRat lambda) {
        if (k < 1) throw std::invalid_argument("two-dimensional Weil irreducible needs k >= 1");
        WeilIrr w;
        w.kind_ = Kind::TwoDim;
        w.k_ = k;
        w.lambda_ = lambda;
        return w;
    }

    Kind kind() const { return kind_; }
    bool is_two_dim() const { return kind_ == Kind::TwoDim; }
    int dim() const { return is_two_dim() ? 2 : 1; }

    ArchField field() const { return is_two_dim() ? ArchField::Real : chi_->field(); }

    const MultChar& chi() const {
        if (kind_ != Kind::OneDim) throw std::logic_error("chi() on a two-dimensional irreducible");
        return *chi_;
    }
    std::int64_t k() const {
        if (kind_ != Kind::TwoDim) throw std::logic_error("k() on a one-dimensional irreducible");
        return k_;
    }
    const GaussRat& lambda() const {
        if (kind_ != Kind::TwoDim) throw std::logic_error("lambda() on a one-dimensional irreducible");
        return lambda_;
    }

    friend bool operator==(const WeilIrr& a, const WeilIrr& b) {
        if (a.kind_ != b.kind_) return false;
        if (a.kind_ == Kind::OneDim) return *a.chi_ == *b.chi_;
        return a.k_ == b.k_ && a.lambda_ == b.lambda_;
    }
    friend bool operator!=(const WeilIrr& a, const WeilIrr& b) { return !(a == b); }
    friend bool operator<(const WeilIrr& a, const WeilIrr& b) {
        if (a.kind_ != b.kind_) return a.kind_ == Kind::TwoDim; // two-dim parts sort first
        if (a.kind_ == Kind::OneDim) return *a.chi_ < *b.chi_;
        return std::tie(a.k_, a.lambda_) < std::tie(b.k_, b.lambda_);
    }

    std::string str() const {
        if (kind_ == Kind::OneDim) return chi_->str();
        return "sigma(" + std::to_string(k_) + "," + lambda_.str() + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const WeilIrr& w) { return os << w.str(); }

private:
    Kind kind_ = Kind::OneDim;
    std::optional<MultChar> chi_;
    std::int64_t k_ = 0;
    GaussRat lambda_;
};

inline WeilIrr dual(const WeilIrr& w) {
    if (w.is_two_dim()) return WeilIrr::two_dim(w.k(), -w.lambda());
    return WeilIrr::one_dim(w.chi().inverse());
}

// Tensor with a character of the base field. For sigma_{k,lambda} the
// character passes through the norm of C/R, so only its lambda shifts.
inline WeilIrr twist(const WeilIrr& w, const MultChar& eta) {
    if (w.field() != eta.field()) throw std::invalid_argument("twist across different fields");
    if (w.is_two_dim()) return WeilIrr::two_dim(w.k(), w.lambda() + eta.lambda());
    return WeilIrr::one_dim(w.chi() * eta);
}

// det sigma_{k,lambda} = sgn^{k+1} |.|^{2 lambda}.
inline MultChar det_two_dim(const WeilIrr& w) {
    if (!w.is_two_dim()) throw std::invalid_argument("determinant formula needs a two-dimensional part");
    return MultChar(ArchField::Real, w.k() + 1, w.lambda() + w.lambda());
}

class LParameter {
public:
    LParameter(ArchField field, std::vector<WeilIrr> parts)
        : field_(field), parts_(std::move(parts)) {
        for (const auto& p : parts_)
            if (p.field() != field_)
                throw std::invalid_argument("parameter part over the wrong field");
        std::sort(parts_.begin(), parts_.end());
    }

    ArchField field() const { return field_; }
    const std::vector<WeilIrr>& parts() const { return parts_; }

    int dim() const {
        int d = 0;
        for (const auto& p : parts_) d += p.dim();
        return d;
    }

    friend bool operator==(const LParameter& a, const LParameter& b) {
        return a.field_ == b.field_ && a.parts_ == b.parts_;
    }
    friend bool operator!=(const LParameter& a, const LParameter& b) { return !(a == b); }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += " + ";
            s += parts_[i].str();
        }
        return s + "]";
    }

private:
    ArchField field_;
    std::vector<WeilIrr> parts_;
};

// Outcome of the eta-symplectic test. When the answer is positive, pairing
// lists 1-based index pairs into parts(): (i,i) marks a two-dimensional
// part of determinant eta standing alone, (i,j) a part matched with its
// eta-twisted dual.
struct SymplecticDecision {
    bool value = false;
    std::vector<std::pair<int, int>> pairing;
};

// A parameter is eta-symplectic iff it splits into two-dimensional pieces
// of determinant eta and pairs {c, dual(c) * eta}. Decided classwise on
// multiplicities.
inline SymplecticDecision is_symplectic_eta(const LParameter& phi, const MultChar& eta) {
    if (phi.field() != eta.field())
        throw std::invalid_argument("eta over the wrong field for this parameter");
    if (phi.dim() % 2 != 0) return {};

    std::map<WeilIrr, std::vector<int>> classes;
    for (int i = 1; i <= static_cast<int>(phi.parts().size()); ++i)
        classes[phi.parts()[i - 1]].push_back(i);

    SymplecticDecision out;
    for (const auto& [c, idx] : classes) {
        if (c.is_two_dim() && det_two_dim(c) == eta) {
            for (int i : idx) out.pairing.emplace_back(i, i);
            continue;
        }
        WeilIrr c_star = twist(dual(c), eta);
        if (c_star == c) {
            if (idx.size() % 2 != 0) return {};
            for (std::size_t t = 0; t + 1 < idx.size(); t += 2)
                out.pairing.emplace_back(idx[t], idx[t + 1]);
            continue;
        }
        auto other = classes.find(c_star);
        if (other == classes.end()) return {};
        if (c_star < c) continue; // zipped when the partner class was visited
        if (other->second.size() != idx.size()) return {};
        for (std::size_t t = 0; t < idx.size(); ++t)
            out.pairing.emplace_back(idx[t], other->second[t]);
    }
    out.value = true;
    return out;
}

// A cuspidal factor of a standard module: a character of GL(1) or a
// relative discrete series D_{k,lambda} of GL(2). k = 0 is the limit case
// |.|^lambda x sgn|.|^lambda, an irreducible principal series.
class CuspidalFactor {
public:
    enum class Kind { Char, Disc };

    static CuspidalFactor character(MultChar chi) {
        CuspidalFactor f;
        f.kind_ = Kind::Char;
        f.chi_ = std::move(chi);
        return f;
    }

    static CuspidalFactor disc(std::int64_t k, GaussRat lambda) {
        if (k < 0) throw std::invalid_argument("discrete series weight must be non-negative");
        CuspidalFactor f;
        f.kind_ = Kind::Disc;
        f.k_ = k;
        f.lambda_ = lambda;
        return f;
    }

    Kind kind() const { return kind_; }
    bool is_disc() const { return kind_ == Kind::Disc; }
    int size() const { return is_disc() ? 2 : 1; }

    const MultChar& chi() const {
        if (kind_ != Kind::Char) throw std::logic_error("chi() on a discrete-series factor");
        return *chi_;
    }
    std::int64_t k() const {
        if (kind_ != Kind::Disc) throw std::logic_error("k() on a character factor");
        return k_;
    }
    const GaussRat& lambda() const {
        if (kind_ != Kind::Disc) throw std::logic_error("lambda() on a character factor");
        return lambda_;
    }

    ArchField field() const { return is_disc() ? ArchField::Real : chi_->field(); }

    Rat exponent() const { return is_disc() ? lambda_.re() : chi_->exponent(); }

    friend bool operator==(const CuspidalFactor& a, const CuspidalFactor& b) {
        if (a.kind_ != b.kind_) return false;
        if (a.kind_ == Kind::Char) return *a.chi_ == *b.chi_;
        return a.k_ == b.k_ && a.lambda_ == b.lambda_;
    }
    friend bool operator!=(const CuspidalFactor& a, const CuspidalFactor& b) { return !(a == b); }

    std::string str() const {
        if (kind_ == Kind::Char) return chi_->str();
        return "D(" + std::to_string(k_) + "," + lambda_.str() + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const CuspidalFactor& f) { return os << f.str(); }

private:
    Kind kind_ = Kind::Char;
    std::optional<MultChar> chi_;
    std::int64_t k_ = 0;
    GaussRat lambda_;
};

// A standard module: cuspidal factors with non-increasing exponents.
class StandardModule {
public:
    StandardModule(ArchField field, std::vector<CuspidalFactor> factors)
        : field_(field), factors_(std::move(factors)) {
        if (factors_.empty()) throw std::invalid_argument("standard module needs at least one factor");
        for (const auto& f : factors_)
            if (f.field() != field_)
                throw std::invalid_argument("factor over the wrong field for this module");
        for (std::size_t i = 0; i + 1 < factors_.size(); ++i)
            if (factors_[i].exponent() < factors_[i + 1].exponent())
                throw std::invalid_argument("standard module factors must have non-increasing exponents");
    }

    // Sort into standard order: exponent descending, then discrete series
    // before characters, then k descending, then Im(lambda) ascending.
    static StandardModule normalized(ArchField field, std::vector<CuspidalFactor> factors) {
        auto key = [](const CuspidalFactor& f) {
            std::int64_t kk = f.is_disc() ? f.k() : f.chi().k();
            Rat im = f.is_disc() ? f.lambda().im() : f.chi().lambda().im();
            return std::make_tuple(f.exponent(), f.is_disc() ? 0 : 1, -kk, im);
        };
        std::stable_sort(factors.begin(), factors.end(), [&](const auto& x, const auto& y) {
            auto kx = key(x);
            auto ky = key(y);
            // exponent descending, then the tie-break tuple ascending
            if (std::get<0>(kx) != std::get<0>(ky)) return std::get<0>(ky) < std::get<0>(kx);
            return kx < ky;
        });
        return StandardModule(field, std::move(factors));
    }

    ArchField field() const { return field_; }
    const std::vector<CuspidalFactor>& factors() const { return factors_; }
    int blocks() const { return static_cast<int>(factors_.size()); }
    const CuspidalFactor& factor(int i) const { return factors_.at(static_cast<std::size_t>(i - 1)); }

    int total_size() const {
        int t = 0;
        for (const auto& f : factors_) t += f.size();
        return t;
    }

    Composition composition() const {
        std::vector<int> parts;
        for (const auto& f : factors_) parts.push_back(f.size());
        return Composition(std::move(parts));
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i) s += " x ";
            s += factors_[i].str();
        }
        return s + "]";
    }

private:
    ArchField field_;
    std::vector<CuspidalFactor> factors_;
};

// Central character of D_{k,lambda}: sgn^{k+1} |.|^{2 lambda}. Valid for
// the limit k = 0 as well.
inline MultChar central_char_disc(std::int64_t k, const GaussRat& lambda) {
    if (k < 0) throw std::invalid_argument("discrete series weight must be non-negative");
    return MultChar(ArchField::Real, k + 1, lambda + lambda);
}

// The Langlands parameter of a standard module. Refuses k = 0 factors,
// whose parameter is the reducible chi_{0,lambda} + chi_{1,lambda}; expand
// those into their two characters first.
inline LParameter langlands_param(const StandardModule& m) {
    std::vector<WeilIrr> parts;
    for (const auto& f : m.factors()) {
        if (!f.is_disc()) {
            parts.push_back(WeilIrr::one_dim(f.chi()));
        } else if (f.k() == 0) {
            throw std::invalid_argument(
                "limit factor D(0,lambda) has no irreducible two-dimensional parameter; "
                "expand it into chi(0,lambda) and chi(1,lambda)");
        } else {
            parts.push_back(WeilIrr::two_dim(f.k(), f.lambda()));
        }
    }
    return LParameter(m.field(), std::move(parts));
}

// GL(2) criterion: D_{k,lambda} carries an (eta,psi)-Shalika period iff its
// central character is eta.
inline bool gl2_has_shalika(const CuspidalFactor& f, const MultChar& eta) {
    if (!f.is_disc()) throw std::invalid_argument("GL(2) Shalika criterion needs a GL(2) factor");
    if (eta.field() != ArchField::Real) throw std::invalid_argument("eta over the wrong field");
    return central_char_disc(f.k(), f.lambda()) == eta;
}

// Same criterion for an irreducible principal series chi1 x chi2: a Shalika
// period exists iff the central character chi1 * chi2 equals eta.
inline bool gl2_has_shalika(const MultChar& chi1, const MultChar& chi2, const MultChar& eta) {
    return chi1 * chi2 == eta;
}

// Restriction of the attached representation to GL+ is reducible iff the
// one-dimensional parts occur in pairs {chi_{0,t}, chi_{1,t}}.
inline bool restriction_reducible(const LParameter& phi) {
    if (phi.field() != ArchField::Real)
        throw std::invalid_argument("restriction criterion is specific to the real field");
    std::map<GaussRat, std::pair<int, int>> counts;
    for (const auto& p : phi.parts()) {
        if (p.is_two_dim()) continue;
        auto& c = counts[p.chi().lambda()];
        (p.chi().k() == 0 ? c.first : c.second) += 1;
    }
    for (const auto& [t, c] : counts)
        if (c.first != c.second) return false;
    return true;
}

} // namespace shalika
