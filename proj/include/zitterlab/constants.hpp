#pragma once

#include <string>

namespace zitterlab {

// CODATA 2018 recommended values (SI).
namespace codata {
inline constexpr double c = 299792458.0;            // m/s, exact
inline constexpr double h = 6.62607015e-34;         // J s, exact
inline constexpr double hbar = 1.054571817e-34;     // J s
inline constexpr double e = 1.602176634e-19;        // C, exact
inline constexpr double m_e = 9.1093837015e-31;     // kg
inline constexpr double eps0 = 8.8541878128e-12;    // F/m
inline constexpr double alpha = 7.2973525693e-3;    // fine-structure constant
inline constexpr double bohr = 5.29177210903e-11;   // m
inline constexpr double hartree = 4.3597447222071e-18;  // J
inline constexpr double atomic_time = 2.4188843265857e-17;   // s
inline constexpr double atomic_velocity = 2.18769126364e6;   // m/s
inline constexpr double hartree_ev = 27.211386245988;        // eV
inline constexpr double ev = 1.602176634e-19;                // J
}  // namespace codata

enum class UnitSystem { AtomicUnits, SI, Natural };

// Unit system plus the constants every formula is parameterized by.
struct PhysConsts {
    UnitSystem system = UnitSystem::AtomicUnits;
    double hbar = 1.0;
    double c = 137.035999;
    double m = 1.0;
    double e = 1.0;
    double eps0 = 1.0;  // such that 4*pi*eps0 = 1 in atomic units

    static PhysConsts atomic_units();
    static PhysConsts si();
    static PhysConsts natural();

    double rest_energy() const { return m * c * c; }
    double fine_structure() const;
    double compton_angular() const { return hbar / (m * c); }  // hbar/mc
};

std::string to_string(UnitSystem s);

}  // namespace zitterlab
