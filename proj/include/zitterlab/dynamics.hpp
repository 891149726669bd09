#pragma once

#include <array>
#include <memory>
#include <vector>

#include "zitterlab/constants.hpp"
#include "zitterlab/fft.hpp"
#include "zitterlab/grid.hpp"
#include "zitterlab/planewave.hpp"
#include "zitterlab/potential.hpp"

namespace zitterlab::dynamics {

struct GaussianMix {
    Complex c_plus{1.0, 0.0};
    Complex c_minus{0.0, 0.0};
};

// Gaussian wavepacket exp(-(x-x0)^2/(4 sigma^2) + i p0 x / hbar) carried by the
// +c velocity eigenstate direction, with each momentum component projected onto
// c_plus Lambda_+ + c_minus Lambda_-; renormalized to unit norm.
// Throws GridTooCoarse if sigma_x < 4 dx or the +-4 sigma support leaves the box;
// BadNormalization if |c_plus|^2 + |c_minus|^2 != 1 within 1e-10.
SpinorField init_gaussian(const Grid1D& grid, double x0, double p0, double sigma_x,
                          const GaussianMix& mix, const PhysConsts& k);

// Scratch buffers for the spectral transforms; one per concurrent caller.
struct StepWorkspace {
    std::array<std::vector<Complex>, 4> buf;
};

// Strang-split spectral stepper: exp(-iV dt/2hbar), exact kinetic propagator
// per momentum mode (cos(E dt/hbar) I - i sin(E dt/hbar) h(p)/E), exp(-iV dt/2hbar).
// Construct once, step many times. A single stepper may serve several threads
// as long as each supplies its own workspace.
class SplitStepper {
  public:
    SplitStepper(const Grid1D& grid, double dt, const PotentialSpec& pot, const PhysConsts& k);

    void step(SpinorField& field, StepWorkspace& ws) const;
    void step(SpinorField& field) const;  // convenience, owns a throwaway workspace
    double dt() const { return dt_; }

  private:
    Grid1D grid_;
    double dt_;
    bool has_potential_;
    Fft fft_;
    std::vector<Complex> half_phase_;  // exp(-i V(x) dt / (2 hbar)) per site
    std::vector<Complex> kin_diag_;    // d(k): upper-block diagonal of the kinetic factor
    std::vector<Complex> kin_off_;     // o(k): anti-diagonal coupling
};

// Single-step convenience wrapper around SplitStepper.
void split_step(SpinorField& field, double dt, const PotentialSpec& pot, const PhysConsts& k);

// Independent oracle: builds the dense 4n x 4n grid Hamiltonian with the
// spectral derivative, exponentiates it by eigendecomposition and applies the
// result in one shot. Throws TooLarge for grid.n > 128.
SpinorField dense_evolve_oracle(const SpinorField& field, double dt, int n_steps,
                                const PotentialSpec& pot, const PhysConsts& k);

// sum x psi^dagger psi dx
double mean_position(const SpinorField& field);

// <H> for the free Hamiltonian plus potential, via momentum space.
double energy_expectation(const SpinorField& field, const PotentialSpec& pot,
                          const PhysConsts& k);

// Norms of the +-energy projections applied per momentum mode.
planewave::EnergyContent energy_sign_fractions(const SpinorField& field, const PhysConsts& k);

struct ZbFit {
    double frequency = 0.0;  // angular frequency of dominant detrended DFT peak
    double amplitude = 0.0;  // least-squares sinusoid amplitude at that frequency
    double peak_ratio = 0.0; // peak magnitude over median spectral floor
};

// Removes the least-squares linear trend, locates the dominant DFT peak and
// refines it with quadratic interpolation, then fits a sinusoid at the refined
// frequency. Throws NoPeak if the peak is below 5x the median floor or the
// oscillation sits below numerical precision (1e-9 hbar/mc).
ZbFit zb_fit(const ObservableSeries& series, const PhysConsts& k);

// Max |residual| after removing the least-squares linear trend.
double detrended_residual_max(const ObservableSeries& series);

struct EvolutionResult {
    ObservableSeries mean_x;
    ObservableSeries norm2;
    SpinorField final_state;
};

// Steps the field n_steps times, sampling <x> and the norm at t=0 and after
// every record_every steps.
EvolutionResult evolve_recorded(SpinorField field, const PotentialSpec& pot, double dt,
                                long n_steps, int record_every, const PhysConsts& k);

// Validates grid/time-step bounds for a planned evolution; throws ConfigInvalid
// naming the violated bound.
void validate_evolution(const Grid1D& grid, double dt, double p0, double sigma_x,
                        const PhysConsts& k);

}  // namespace zitterlab::dynamics
