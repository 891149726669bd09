#pragma once

#include <vector>

#include "zitterlab/constants.hpp"
#include "zitterlab/grid.hpp"
#include "zitterlab/potential.hpp"

namespace zitterlab::pairsim {

// Created-particle position densities on the grid at one instant.
struct PairDensities {
    Grid1D grid;
    std::vector<double> rho_e;
    std::vector<double> rho_p;
    double time = 0.0;
    std::vector<double> joint;  // row-major joint_n x joint_n when computed
    int joint_n = 0;

    double integral_e() const;
    double integral_p() const;
};

struct PairSimOptions {
    int n_momenta = 0;     // momenta per branch; 0 -> all grid.n
    double dt = 5.0e-6;    // desk-scale default in atomic units
    bool positron_branch = true;
    bool joint = false;    // joint density at the last recorded time; grid.n <= 256
    int threads = 0;       // 0 -> max_threads()
};

// Computational mode-sum for the sudden switch-on at t = 0. Every free
// negative-energy plane-wave mode is evolved with the split-step propagator
// under the full Hamiltonian; the electron density is the summed squared norm
// of the mode-wise positive-energy projections. The positron density comes
// from the negative-energy projections of evolved positive-energy modes.
// Throws TooManyModes (n_momenta > grid.n) and JointTooLarge (joint with
// grid.n > 256).
std::vector<PairDensities> pair_evolution(const Grid1D& grid, const PotentialSpec& pot,
                                          const std::vector<double>& times, const PhysConsts& k,
                                          const PairSimOptions& opts = {});

// Single-time convenience form.
PairDensities pair_mode_sum(const Grid1D& grid, const PotentialSpec& pot, double t,
                            const PhysConsts& k, int n_modes = 0);

struct SatelliteDetectOptions {
    double threshold_frac = 0.05;  // peaks below this fraction of the max are ignored
    int min_separation_pts = 3;
    double window_center = 0.0;
    double window_half_width = 0.0;  // <= 0 -> whole grid
};

struct SatelliteReport {
    double main_peak_x = 0.0;
    std::vector<double> satellite_xs;  // ordered by distance from the main peak
    double separation = 0.0;           // main peak to nearest satellite
    double gap_depth = 0.0;            // min density between them / max peak density
    double time = 0.0;
};

// Local-maximum analysis of rho_e. Throws NoStructure when no satellite peak
// survives the threshold and separation rules.
SatelliteReport detect_satellites(const PairDensities& d,
                                  const SatelliteDetectOptions& opts = {});

// Least-squares slope of the outermost-satellite distance from the main peak
// versus time. Needs >= 3 samples; propagates NoStructure from detection.
double satellite_speed(const std::vector<PairDensities>& runs,
                       const SatelliteDetectOptions& opts = {});
double satellite_speed(const std::vector<SatelliteReport>& reports);

enum class ScanKind { V0, W };

struct ScanRow {
    double parameter = 0.0;
    double separation = 0.0;  // measured main-to-satellite distance
    double predicted = 0.0;   // hbar c / (2 E_eff), E_eff = m c^2 + V0/2
};

struct ScanOptions {
    ScanKind kind = ScanKind::V0;
    std::vector<double> values;  // scanned V0 or W
    double fixed_v0 = 0.0;       // used when kind == W
    double fixed_w = 0.0;        // used when kind == V0
    // Sampled before the outgoing fronts dominate the lobe pattern, so the
    // separation tracks the field-dependent structure scale.
    double time = 5.0e-4;
    PairSimOptions sim;
    SatelliteDetectOptions detect;
};

// hbar c / (2 E_eff) with E_eff = m c^2 + V0/2; vanishes as V0 -> infinity.
double predicted_amplitude(double v0, const PhysConsts& k);

// Separation versus field-strength (or width) scan; every V0 must be
// supercritical (> 2 m c^2).
std::vector<ScanRow> amplitude_vs_field(const Grid1D& grid, const ScanOptions& opts,
                                        const PhysConsts& k);

// Charge conjugation in the standard representation: psi_c = i beta alpha_y psi*.
Spinor charge_conjugate(const Spinor& psi);

}  // namespace zitterlab::pairsim
