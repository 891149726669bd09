#include "zitterlab/electrocalc.hpp"

#include <cmath>
#include <numbers>

namespace zitterlab::electrocalc {

namespace {
constexpr double pi = std::numbers::pi;
}

EnergyUnit native_energy_unit(const PhysConsts& k) {
    switch (k.system) {
        case UnitSystem::AtomicUnits: return EnergyUnit::Hartree;
        case UnitSystem::SI: return EnergyUnit::Joule;
        case UnitSystem::Natural: return EnergyUnit::NaturalUnit;
    }
    return EnergyUnit::Hartree;
}

double to_ev(const EnergyResult& r) {
    switch (r.unit) {
        case EnergyUnit::Hartree: return r.value * codata::hartree_ev;
        case EnergyUnit::eV: return r.value;
        case EnergyUnit::Joule: return r.value / codata::ev;
        case EnergyUnit::NaturalUnit:
            throw UnsupportedDimension("to_ev: natural-unit energies carry no absolute scale");
    }
    return 0.0;
}

double self_potential(const PhysConsts& k) {
    return -k.m * k.c * k.e / (4.0 * pi * k.eps0 * k.hbar);
}

EnergyResult zb_self_energy(const PhysConsts& k) {
    EnergyResult r;
    r.value = k.fine_structure() * k.rest_energy();
    r.unit = native_energy_unit(k);
    r.formula_id = "alpha_m_c2";
    return r;
}

double electromagnetic_mass(const PhysConsts& k) { return k.m * (1.0 + k.fine_structure()); }

EnergyResult shell_model_energy(double radius, const PhysConsts& k) {
    if (!(radius > 0.0)) throw NonPositiveRadius("shell_model_energy: radius must be > 0");
    EnergyResult r;
    r.value = k.e * k.e / (8.0 * pi * k.eps0 * radius);
    r.unit = native_energy_unit(k);
    r.formula_id = "shell_e2_over_8pieps0R";
    return r;
}

namespace {

EnergyResult darwin_shift_impl(int z, int n, const PhysConsts& k, int l, double prefactor,
                               const char* id) {
    if (l != 0) throw NotSState("darwin_shift_s_state: only l = 0 states carry the contact term");
    const double zd = static_cast<double>(z);
    const double nd = static_cast<double>(n);
    // |psi_n00(0)|^2 = Z^3 / (pi n^3 a0^3) with a0 = 4 pi eps0 hbar^2 / (m e^2).
    const double a0 = 4.0 * pi * k.eps0 * k.hbar * k.hbar / (k.m * k.e * k.e);
    const double density0 = zd * zd * zd / (pi * nd * nd * nd * a0 * a0 * a0);
    const double laplacian_weight = zd * k.e * k.e / k.eps0;  // <laplacian V> = Z e^2 |psi(0)|^2 / eps0
    EnergyResult r;
    r.value = prefactor * (k.hbar * k.hbar / (k.m * k.m * k.c * k.c)) * laplacian_weight * density0;
    r.unit = native_energy_unit(k);
    r.formula_id = id;
    return r;
}

}  // namespace

EnergyResult darwin_shift_s_state(int z, int n, const PhysConsts& k, int l) {
    return darwin_shift_impl(z, n, k, l, 1.0 / 6.0, "darwin_one_sixth");
}

EnergyResult darwin_shift_s_state_conventional(int z, int n, const PhysConsts& k, int l) {
    return darwin_shift_impl(z, n, k, l, 1.0 / 8.0, "darwin_one_eighth");
}

namespace {

double au_to_si_factor(Dimension d) {
    switch (d) {
        case Dimension::Length: return codata::bohr;
        case Dimension::Time: return codata::atomic_time;
        case Dimension::Velocity: return codata::atomic_velocity;
        case Dimension::Energy: return codata::hartree;
    }
    return 1.0;
}

}  // namespace

UnitQuantity unit_convert(const UnitQuantity& q, UnitSystem target) {
    if (q.system == UnitSystem::Natural || target == UnitSystem::Natural) {
        throw UnsupportedDimension("unit_convert: natural units carry no absolute scale");
    }
    if (q.system == target) return q;
    const double f = au_to_si_factor(q.dimension);
    UnitQuantity out = q;
    out.system = target;
    out.value = (target == UnitSystem::SI) ? q.value * f : q.value / f;
    return out;
}

UnitQuantity compton_wavelength(ComptonVariant variant, const PhysConsts& k) {
    double v = k.hbar / (k.m * k.c);
    switch (variant) {
        case ComptonVariant::HOverMc: v *= 2.0 * pi; break;
        case ComptonVariant::HbarOverMc: break;
        case ComptonVariant::HbarOver2Mc: v *= 0.5; break;
    }
    return UnitQuantity{v, Dimension::Length, k.system};
}

double round_sig(double x, int figures) {
    if (x == 0.0 || !std::isfinite(x)) return x;
    const double mag = std::floor(std::log10(std::abs(x)));
    const double scale = std::pow(10.0, static_cast<double>(figures - 1) - mag);
    return std::round(x * scale) / scale;
}

}  // namespace zitterlab::electrocalc
