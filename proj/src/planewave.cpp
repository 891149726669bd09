#include "zitterlab/planewave.hpp"

#include <cmath>

namespace zitterlab::planewave {

double energy(MomentumPoint p, const PhysConsts& k) {
    return std::hypot(k.m * k.c * k.c, p.p * k.c);
}

double velocity_from_momentum(MomentumPoint p, const PhysConsts& k) {
    return p.p * k.c * k.c / energy(p, k);
}

Mat4 momentum_hamiltonian(MomentumPoint p, const PhysConsts& k) {
    Mat4 h;
    const double mc2 = k.m * k.c * k.c;
    const double cp = k.c * p.p;
    h(0, 0) = mc2;
    h(1, 1) = mc2;
    h(2, 2) = -mc2;
    h(3, 3) = -mc2;
    h(0, 3) = cp;
    h(1, 2) = cp;
    h(2, 1) = cp;
    h(3, 0) = cp;
    return h;
}

Spinor free_eigenspinor(MomentumPoint p, EnergySign sign, SpinLabel spin, const PhysConsts& k) {
    const double e = energy(p, k);
    const double mc2 = k.m * k.c * k.c;
    const double cp = k.c * p.p;
    // Lower/upper admixture cp/(E + mc^2); vanishes at p = 0.
    const double g = cp / (e + mc2);
    const double n = 1.0 / std::sqrt(1.0 + g * g);

    Spinor u;
    if (sign == EnergySign::Positive) {
        if (spin == SpinLabel::Up) {
            u[0] = n;
            u[3] = n * g;
        } else {
            u[1] = n;
            u[2] = n * g;
        }
    } else {
        if (spin == SpinLabel::Up) {
            u[2] = n;
            u[1] = -n * g;
        } else {
            u[3] = n;
            u[0] = -n * g;
        }
    }
    return u;
}

Mat4 energy_projector(MomentumPoint p, EnergySign sign, const PhysConsts& k) {
    const double e = energy(p, k);
    const double s = (sign == EnergySign::Positive) ? 1.0 : -1.0;
    const Mat4 h = momentum_hamiltonian(p, k);
    return 0.5 * Mat4::identity() + (s / (2.0 * e)) * h;
}

Spinor apply_energy_projector(const Spinor& psi, MomentumPoint p, EnergySign sign,
                              const PhysConsts& k) {
    const double e = energy(p, k);
    const double s = (sign == EnergySign::Positive) ? 1.0 : -1.0;
    const double mc2 = k.m * k.c * k.c;
    const double cp = k.c * p.p;
    // h psi expanded against the sparse structure of h(p).
    Spinor h_psi;
    h_psi[0] = mc2 * psi[0] + cp * psi[3];
    h_psi[1] = mc2 * psi[1] + cp * psi[2];
    h_psi[2] = cp * psi[1] - mc2 * psi[2];
    h_psi[3] = cp * psi[0] - mc2 * psi[3];
    Spinor r;
    for (int i = 0; i < 4; ++i) r[i] = 0.5 * (psi[i] + s * h_psi[i] / e);
    return r;
}

Spinor velocity_eigenstate(const VelocityEigenstateSpec& spec) {
    const double w = std::norm(spec.a) + std::norm(spec.b);
    if (std::abs(w - 0.5) > 1e-10) {
        throw BadNormalization("velocity_eigenstate: |a|^2 + |b|^2 must equal 1/2");
    }
    const Complex a = spec.a;
    const Complex b = spec.b;
    const double s = (spec.sign >= 0) ? 1.0 : -1.0;

    Spinor v;
    v[0] = a;
    v[1] = b;
    switch (spec.axis) {
        case Axis::X:
            v[2] = s * b;
            v[3] = s * a;
            break;
        case Axis::Y:
            v[2] = -s * iu * b;
            v[3] = s * iu * a;
            break;
        case Axis::Z:
            v[2] = s * a;
            v[3] = -s * b;
            break;
    }
    return v;
}

EnergyContent energy_content(const Spinor& psi, MomentumPoint p, const PhysConsts& k) {
    EnergyContent r;
    r.f_plus = apply_energy_projector(psi, p, EnergySign::Positive, k).norm2();
    r.f_minus = apply_energy_projector(psi, p, EnergySign::Negative, k).norm2();
    return r;
}

double velocity_expectation(const Spinor& psi, Axis axis, const PhysConsts& k) {
    const Mat4 a = algebra::dirac_alpha(axis);
    return k.c * dot(psi, a * psi).real();
}

Mat4 position_operator_t(double t, MomentumPoint p, const PhysConsts& k) {
    const double e = energy(p, k);
    if (e * e * e * e < 1e-30) {
        throw SingularH("position_operator_t: free Hamiltonian is singular");
    }
    const Mat4 h = momentum_hamiltonian(p, k);
    // h^2 = E^2 I, so h^{-1} = h / E^2 and e^{-2iht/hbar} has a closed form.
    const Mat4 hinv = (1.0 / (e * e)) * h;
    const double theta = 2.0 * e * t / k.hbar;
    const Mat4 osc = std::cos(theta) * Mat4::identity() - (iu * std::sin(theta) / e) * h;

    const Mat4 classical = (k.c * k.c * p.p * t) * hinv;
    const Mat4 odd = algebra::dirac_alpha(Axis::X) - (k.c * p.p) * hinv;
    const Mat4 quantum = (iu * k.hbar * k.c * 0.5) * (odd * hinv * osc);
    return classical + quantum;
}

double xdagx_eigenvalue(double energy, const PhysConsts& k) {
    return k.hbar * k.hbar * k.c * k.c / (4.0 * energy * energy);
}

Mat4 fw_position_matrix(MomentumPoint p, const PhysConsts& k) {
    const double e = energy(p, k);
    const double mc2 = k.m * k.c * k.c;
    const double cp = k.c * p.p;
    const Mat4 beta_alpha = algebra::dirac_beta() * algebra::dirac_alpha(Axis::X);
    // i beta alpha_x [ 1/(2E) - p c/(2E (E + mc^2)) ], scaled by hbar c for length.
    const double coeff = k.hbar * k.c * (1.0 / (2.0 * e) - cp / (2.0 * e * (e + mc2)));
    return (iu * coeff) * beta_alpha;
}

double fw_position_defect(MomentumPoint p, const PhysConsts& k) {
    return algebra::hermiticity_defect(fw_position_matrix(p, k));
}

}  // namespace zitterlab::planewave
