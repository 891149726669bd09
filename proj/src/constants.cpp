#include "zitterlab/constants.hpp"

#include <cmath>
#include <numbers>

namespace zitterlab {

PhysConsts PhysConsts::atomic_units() {
    PhysConsts k;
    k.system = UnitSystem::AtomicUnits;
    k.hbar = 1.0;
    k.c = 137.035999;
    k.m = 1.0;
    k.e = 1.0;
    k.eps0 = 1.0 / (4.0 * std::numbers::pi);
    return k;
}

PhysConsts PhysConsts::si() {
    PhysConsts k;
    k.system = UnitSystem::SI;
    k.hbar = codata::hbar;
    k.c = codata::c;
    k.m = codata::m_e;
    k.e = codata::e;
    k.eps0 = codata::eps0;
    return k;
}

PhysConsts PhysConsts::natural() {
    PhysConsts k;
    k.system = UnitSystem::Natural;
    k.hbar = 1.0;
    k.c = 1.0;
    k.m = 1.0;
    k.e = std::sqrt(codata::alpha);
    k.eps0 = 1.0 / (4.0 * std::numbers::pi);
    return k;
}

double PhysConsts::fine_structure() const {
    return e * e / (4.0 * std::numbers::pi * eps0 * hbar * c);
}

std::string to_string(UnitSystem s) {
    switch (s) {
        case UnitSystem::AtomicUnits: return "atomic_units";
        case UnitSystem::SI: return "si";
        case UnitSystem::Natural: return "natural";
    }
    return "unknown";
}

}  // namespace zitterlab
