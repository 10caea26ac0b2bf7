#pragma once

// Decision procedures for twisted Shalika and linear periods, and the
// restriction sign epsilon.
//
// The existence question for a standard module is answered in two layers:
// the parameter-side necessary condition (eta-symplectic type) and the
// orbit-side count of matching orbits whose block involution is compatible
// with the module. Under the generic-irreducibility hypothesis the two
// agree and the verdict is definite.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "shalika/langlands.hpp"
#include "shalika/orbits.hpp"
#include "shalika/rational.hpp"

namespace shalika {

struct ShalikaSpec {
    MultChar eta;
    Rat a; // additive character parameter psi_a, nonzero

    ShalikaSpec(MultChar e, Rat a_) : eta(std::move(e)), a(a_) {
        if (a.is_zero()) throw std::invalid_argument("psi parameter a must be nonzero");
    }
};

enum class Verdict { Exists, NotExists, NecessaryOnlyNotGeneric };

inline std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Exists: return "Exists";
        case Verdict::NotExists: return "NotExists";
        case Verdict::NecessaryOnlyNotGeneric: return "NecessaryOnlyNotGeneric";
    }
    return "?";
}

struct PeriodReport {
    bool necessary = false;
    SymplecticDecision symplectic;
    int matching_orbits = 0;
    int compatible_orbits = 0;
    int dim_upper_bound = 0;
    std::optional<OrbitDescriptor> witness;
    Verdict verdict = Verdict::NotExists;
};

struct EpsilonReport {
    int p = 0;
    int q = 0;
    int epsilon = 1;
};

// The factor representing the eta-twisted contragredient: characters
// invert and multiply, discrete series reflect their lambda and shift by
// eta's.
inline CuspidalFactor dual_twist(const CuspidalFactor& f, const MultChar& eta) {
    if (!f.is_disc()) return CuspidalFactor::character(f.chi().inverse() * eta);
    if (eta.field() != ArchField::Real) throw std::invalid_argument("eta over the wrong field");
    return CuspidalFactor::disc(f.k(), -f.lambda() + eta.lambda());
}

// Does the block involution of a matching orbit realize the module as an
// eta-symplectic pairing? Paired blocks must carry twisted-dual factors;
// fixed blocks must carry a GL(2) factor with central character eta.
inline bool compatible(const OrbitDescriptor& orbit, const StandardModule& m, const MultChar& eta) {
    if (orbit.cls != OrbitClass::Matching)
        throw std::invalid_argument("compatibility is defined for matching orbits");
    if (!(orbit.comp == m.composition()))
        throw std::invalid_argument("orbit and module have different compositions");
    int r = m.blocks();
    for (int i = 1; i <= r; ++i) {
        int j = orbit.s.at(static_cast<std::size_t>(i - 1));
        if (j == i) {
            if (!gl2_has_shalika(m.factor(i), eta)) return false;
        } else if (j > i) {
            if (!(m.factor(i) == dual_twist(m.factor(j), eta))) return false;
        }
    }
    return true;
}

// Period existence for a standard module. The necessary condition is the
// eta-symplectic parameter; matching orbits compatible with the module
// bound the period space dimension, one each.
inline PeriodReport shalika_decision(const StandardModule& m, const ShalikaSpec& spec,
                                     bool assume_generic_irreducible) {
    PeriodReport rep;
    LParameter phi = langlands_param(m);
    rep.symplectic = is_symplectic_eta(phi, spec.eta);
    rep.necessary = rep.symplectic.value;

    ParabolicDatum P(m.composition());
    for (const auto& desc : classified_orbits(P)) {
        if (desc.cls != OrbitClass::Matching) continue;
        ++rep.matching_orbits;
        if (compatible(desc, m, spec.eta)) {
            ++rep.compatible_orbits;
            if (!rep.witness) rep.witness = desc;
        }
    }
    rep.dim_upper_bound = rep.compatible_orbits;

    if (!rep.necessary) rep.verdict = Verdict::NotExists;
    else if (assume_generic_irreducible) rep.verdict = Verdict::Exists;
    else rep.verdict = Verdict::NecessaryOnlyNotGeneric;
    return rep;
}

// Twisted linear periods agree with Shalika periods for generic
// irreducible modules; without that hypothesis this decision refuses to
// answer.
inline PeriodReport linear_decision(const StandardModule& m, const MultChar& eta,
                                    bool assume_generic_irreducible) {
    if (!assume_generic_irreducible)
        throw std::invalid_argument(
            "linear period decision requires the generic-irreducibility hypothesis");
    return shalika_decision(m, ShalikaSpec(eta, Rat(1)), true);
}

inline int epsilon_from_pq(int p, int q, int sign_a) {
    if (p < 0 || q < 0) throw std::invalid_argument("epsilon needs non-negative p, q");
    if (sign_a != 1 && sign_a != -1) throw std::invalid_argument("sign of a must be +1 or -1");
    int eps = (p % 2 == 1 && sign_a < 0) ? -1 : 1;
    if ((p * (p - 1) / 2 + q) % 2 == 1) eps = -eps;
    return eps;
}

// The parameter of an all-discrete-series module with k = 0 factors
// expanded into their character pairs.
inline LParameter restriction_parameter(const StandardModule& m) {
    if (m.field() != ArchField::Real)
        throw std::invalid_argument("restriction sign is specific to the real field");
    std::vector<WeilIrr> parts;
    for (const auto& f : m.factors()) {
        if (!f.is_disc())
            throw std::invalid_argument(
                "restriction sign is defined for products of discrete series factors");
        if (f.k() == 0) {
            parts.push_back(WeilIrr::one_dim(MultChar(ArchField::Real, 0, f.lambda())));
            parts.push_back(WeilIrr::one_dim(MultChar(ArchField::Real, 1, f.lambda())));
        } else {
            parts.push_back(WeilIrr::two_dim(f.k(), f.lambda()));
        }
    }
    return LParameter(ArchField::Real, std::move(parts));
}

// Restriction sign for pi|GL+ when the restriction is reducible and the
// parameter is eta-symplectic: epsilon = (sgn a)^p (-1)^{p(p-1)/2 + q}
// with p the number of factors carrying a Shalika period and q = (n-p)/2.
inline EpsilonReport epsilon_pi(const StandardModule& m, const ShalikaSpec& spec) {
    LParameter phi = restriction_parameter(m);
    if (!restriction_reducible(phi))
        throw std::invalid_argument("restriction to GL+ is irreducible for this module");
    if (!is_symplectic_eta(phi, spec.eta).value)
        throw std::invalid_argument("parameter is not eta-symplectic");

    int n = m.blocks();
    EpsilonReport rep;
    for (const auto& f : m.factors())
        if (gl2_has_shalika(f, spec.eta)) ++rep.p;
    if ((n - rep.p) % 2 != 0)
        throw std::logic_error("factor count and period count have different parity");
    rep.q = (n - rep.p) / 2;
    rep.epsilon = epsilon_from_pq(rep.p, rep.q, spec.a.sgn());
    return rep;
}

// Which periods a factor of a parabolic induction carries.
struct PeriodSet {
    bool psi = false;
    bool psi_inv = false;
};

enum class InductionStatus { Guaranteed, Unknown };

// Sufficient conditions for a Shalika period on pi_1 x pi_2 restricted to
// the even part, by the sizes of the two factors mod 4 and the periods
// they carry.
inline InductionStatus plus_induction_compatible(int n1, int n2, const PeriodSet& p1,
                                                 const PeriodSet& p2) {
    if (n1 <= 0 || n2 <= 0 || n1 % 2 != 0 || n2 % 2 != 0)
        throw std::invalid_argument("factor sizes must be even and positive");
    if ((n1 % 4 == 0 || n2 % 4 == 0) && p1.psi && p2.psi) return InductionStatus::Guaranteed;
    if (n1 % 4 == 2 && n2 % 4 == 2 && p1.psi_inv && p2.psi) return InductionStatus::Guaranteed;
    return InductionStatus::Unknown;
}

// Irreducibility of D_{k,lambda} x D_{k,z0-lambda}: fails exactly when
// 2*lambda - z0 is a nonzero rational integer.
inline bool gl4_pair_irreducible(std::int64_t /*k*/, const GaussRat& lambda, const GaussRat& z0) {
    GaussRat d = lambda + lambda - z0;
    return !(d.im().is_zero() && d.re().is_integer() && !d.re().is_zero());
}

} // namespace shalika
