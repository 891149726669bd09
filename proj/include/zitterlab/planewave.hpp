#pragma once

#include "zitterlab/algebra.hpp"
#include "zitterlab/complexmat.hpp"
#include "zitterlab/constants.hpp"
#include "zitterlab/errors.hpp"

namespace zitterlab {

struct MomentumPoint {
    double p = 0.0;  // 1D momentum along x, units of the active system
};

enum class EnergySign { Positive, Negative };
enum class SpinLabel { Up, Down };

namespace planewave {

// E(p) = sqrt(m^2 c^4 + p^2 c^2)
double energy(MomentumPoint p, const PhysConsts& k);

// v(p) = p c^2 / E(p); odd in p, |v| < c strictly for finite p.
double velocity_from_momentum(MomentumPoint p, const PhysConsts& k);

// Momentum-space free Hamiltonian h(p) = c p alpha_x + beta m c^2.
Mat4 momentum_hamiltonian(MomentumPoint p, const PhysConsts& k);

// Normalized eigenspinor of h(p) with eigenvalue +-E(p).
// Spin convention at p = 0:
//   (+,up) -> (1,0,0,0), (+,down) -> (0,1,0,0),
//   (-,up) -> (0,0,1,0), (-,down) -> (0,0,0,1).
Spinor free_eigenspinor(MomentumPoint p, EnergySign sign, SpinLabel spin, const PhysConsts& k);

// Lambda_+- = (E I +- h(p)) / (2E); hermitian idempotent of rank 2.
Mat4 energy_projector(MomentumPoint p, EnergySign sign, const PhysConsts& k);

// Cheap projector application without forming the matrix.
Spinor apply_energy_projector(const Spinor& psi, MomentumPoint p, EnergySign sign,
                              const PhysConsts& k);

// Parameters of a velocity eigenstate: the full spinor is normalized when
// |a|^2 + |b|^2 = 1/2.
struct VelocityEigenstateSpec {
    Axis axis = Axis::X;
    Complex a{0.5, 0.0};
    Complex b{0.5, 0.0};
    int sign = +1;  // +1 -> eigenvalue +c, -1 -> eigenvalue -c
};

// Eigenstate of c*alpha_axis with eigenvalue sign*c.
// Throws BadNormalization if | |a|^2 + |b|^2 - 1/2 | > 1e-10.
Spinor velocity_eigenstate(const VelocityEigenstateSpec& spec);

struct EnergyContent {
    double f_plus = 0.0;
    double f_minus = 0.0;
};

// Squared norms of the +-energy projections at momentum p; sums to 1 for a
// normalized spinor.
EnergyContent energy_content(const Spinor& psi, MomentumPoint p, const PhysConsts& k);

// <psi| c alpha_axis |psi>, real for any spinor; bounded by c in magnitude.
double velocity_expectation(const Spinor& psi, Axis axis, const PhysConsts& k);

// Momentum-space matrix of the time-dependent position operator (integration
// constant dropped):
//   x(t) = c^2 h^{-1} p t + (i hbar c / 2)(alpha_x - c h^{-1} p) h^{-1} e^{-2 i h t / hbar}
// Throws SingularH if |det h| < 1e-30 (cannot occur for m > 0).
Mat4 position_operator_t(double t, MomentumPoint p, const PhysConsts& k);

// Eigenvalue of x^dagger x: hbar^2 c^2 / (4 E^2).
double xdagx_eigenvalue(double energy, const PhysConsts& k);

// Matrix terms added to x by the mean-position transform, restricted to 1D
// (the sigma x p cross term vanishes), scaled by hbar*c to carry length units:
//   hbar c [ i beta alpha_x / (2 E_p) - i beta alpha_x p c / (2 E_p (E_p + m c^2)) ]
Mat4 fw_position_matrix(MomentumPoint p, const PhysConsts& k);

// Hermiticity defect of fw_position_matrix. Reported as measured; the closed
// form above is hermitian, so this is zero up to roundoff.
double fw_position_defect(MomentumPoint p, const PhysConsts& k);

}  // namespace planewave
}  // namespace zitterlab
