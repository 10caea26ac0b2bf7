// Walks the GL(4) example end to end: a pair of relative discrete series
// D(3,1/2), the twisting character sgn|.|, and the decisions the library
// makes about it.

#include <iostream>

#include "shalika/shalika.hpp"

int main() {
    using namespace shalika;

    MultChar eta(ArchField::Real, 1, GaussRat(Rat(1)));
    StandardModule pi = StandardModule::normalized(
        ArchField::Real, {CuspidalFactor::disc(3, GaussRat(Rat(1, 2))),
                          CuspidalFactor::disc(3, GaussRat(Rat(1, 2)))});

    std::cout << "module   " << pi.str() << "\n";
    std::cout << "eta      " << eta.str() << "\n\n";

    LParameter phi = langlands_param(pi);
    SymplecticDecision sym = is_symplectic_eta(phi, eta);
    std::cout << "parameter " << phi.str() << "\n";
    std::cout << "eta-symplectic: " << (sym.value ? "yes" : "no") << "\n\n";

    PeriodReport rep = shalika_decision(pi, ShalikaSpec(eta, Rat(1)), true);
    std::cout << "matching orbits:   " << rep.matching_orbits << "\n";
    std::cout << "compatible orbits: " << rep.compatible_orbits << "\n";
    if (rep.witness) std::cout << "witness orbit:     " << rep.witness->omega.str() << "\n";
    std::cout << "verdict:           " << verdict_name(rep.verdict) << "\n\n";

    for (int sign : {1, -1}) {
        EpsilonReport eps = epsilon_pi(pi, ShalikaSpec(eta, Rat(sign)));
        std::cout << "epsilon at a = " << sign << ": " << eps.epsilon << "  (p = " << eps.p
                  << ", q = " << eps.q << ")\n";
    }
    return 0;
}
