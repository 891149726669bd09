#pragma once

#include <string>

#include "zitterlab/constants.hpp"
#include "zitterlab/errors.hpp"

namespace zitterlab::electrocalc {

enum class EnergyUnit { Hartree, eV, Joule, NaturalUnit };

struct EnergyResult {
    double value = 0.0;
    EnergyUnit unit = EnergyUnit::Hartree;
    std::string formula_id;
};

// Energy unit native to a constants set: Hartree for atomic units, Joule for
// SI, the dimensionless natural unit otherwise.
EnergyUnit native_energy_unit(const PhysConsts& k);
double to_ev(const EnergyResult& r);

// Self-potential of the light-like displaced charge: -m c e / (4 pi eps0 hbar).
double self_potential(const PhysConsts& k);

// alpha m c^2, the energy raise from the self-interaction; electromagnetic
// mass is m (1 + alpha).
EnergyResult zb_self_energy(const PhysConsts& k);
double electromagnetic_mass(const PhysConsts& k);

// Field energy of a uniformly charged spherical shell: e^2 / (8 pi eps0 R).
// Throws NonPositiveRadius.
EnergyResult shell_model_energy(double radius, const PhysConsts& k);

// s-state energy shift (hbar^2 / 6 m^2 c^2) <laplacian V> with the hydrogenic
// density at the origin; uses the 1/6 prefactor. Throws NotSState if l != 0.
EnergyResult darwin_shift_s_state(int z, int n, const PhysConsts& k, int l = 0);
// Same with the conventional 1/8 prefactor, for comparison.
EnergyResult darwin_shift_s_state_conventional(int z, int n, const PhysConsts& k, int l = 0);

enum class Dimension { Length, Time, Velocity, Energy };

struct UnitQuantity {
    double value = 0.0;
    Dimension dimension = Dimension::Length;
    UnitSystem system = UnitSystem::AtomicUnits;
};

// Exact multiplicative CODATA factors between atomic units and SI.
// Throws UnsupportedDimension for systems other than these two.
UnitQuantity unit_convert(const UnitQuantity& q, UnitSystem target);

enum class ComptonVariant { HOverMc, HbarOverMc, HbarOver2Mc };

UnitQuantity compton_wavelength(ComptonVariant variant, const PhysConsts& k);

// x rounded to the given number of significant decimal figures.
double round_sig(double x, int figures);

}  // namespace zitterlab::electrocalc
