#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>

#include "zitterlab/pairsim.hpp"
#include "zitterlab/planewave.hpp"

using namespace zitterlab;
namespace ps = zitterlab::pairsim;
namespace pw = zitterlab::planewave;

namespace {

// Synthetic density from a list of (center, sigma, height) Gaussians.
ps::PairDensities synthetic_density(const Grid1D& grid,
                                    const std::vector<std::array<double, 3>>& bumps,
                                    double time = 1.0e-4) {
    ps::PairDensities d;
    d.grid = grid;
    d.time = time;
    d.rho_e.assign(grid.n, 0.0);
    d.rho_p.assign(grid.n, 0.0);
    for (int j = 0; j < grid.n; ++j) {
        const double x = grid.x(j);
        for (const auto& b : bumps) {
            const double arg = (x - b[0]) / b[1];
            d.rho_e[j] += b[2] * std::exp(-arg * arg);
        }
        d.rho_p[j] = d.rho_e[j];
    }
    return d;
}

}  // namespace

TEST_CASE("tanh potential limits") {
    CHECK(ps::tanh_potential(0.0, 10.0, 0.5) == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(ps::tanh_potential(5.0 * 0.5, 10.0, 0.5) >= 0.9999 * 10.0);
    CHECK(ps::tanh_potential(-5.0 * 0.5, 10.0, 0.5) <= 1e-4 * 10.0);

    // W -> 0 approaches a sharp step of height V0
    const double v_narrow = ps::tanh_potential(1e-6, 10.0, 1e-8);
    CHECK(v_narrow == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(ps::tanh_potential(-1e-6, 10.0, 1e-8) <= 1e-12);
}

TEST_CASE("charge conjugation is an involution mapping energy signs") {
    const auto k = PhysConsts::atomic_units();
    const MomentumPoint p{1.7};

    const Spinor u = pw::free_eigenspinor(p, EnergySign::Negative, SpinLabel::Up, k);
    const Spinor uc = ps::charge_conjugate(u);

    // C^2 = 1
    const Spinor ucc = ps::charge_conjugate(uc);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(ucc[i] - u[i]) <= 1e-15);

    // C maps a -E eigenvector of h(p) to a +E eigenvector of h(-p)
    const Mat4 hm = pw::momentum_hamiltonian({-p.p}, k);
    const double e = pw::energy(p, k);
    const Spinor r = hm * uc - Complex(e) * uc;
    CHECK(r.norm() / e <= 1e-13);
}

TEST_CASE("vacuum stays empty without a field") {
    const auto k = PhysConsts::atomic_units();
    const Grid1D grid = Grid1D::make(64, -1.0, 1.0);

    ps::PairSimOptions opts;
    opts.dt = 2e-5;
    const auto runs = ps::pair_evolution(grid, PotentialSpec::zero(), {4e-4, 8e-4}, k, opts);
    for (const auto& d : runs) {
        for (int j = 0; j < grid.n; ++j) {
            CHECK(d.rho_e[j] <= 1e-12);
            CHECK(d.rho_p[j] <= 1e-12);
        }
    }
}

TEST_CASE("supercritical step creates symmetric charge") {
    const auto k = PhysConsts::atomic_units();
    const Grid1D grid = Grid1D::make(256, -1.0, 1.0);
    const auto pot = PotentialSpec::tanh_step(2.5 * k.rest_energy(), 0.3 / k.c);

    ps::PairSimOptions opts;
    opts.dt = 1e-5;
    const std::vector<double> times{1.6e-4, 3.2e-4, 4.8e-4, 6.4e-4, 8.0e-4};
    const auto runs = ps::pair_evolution(grid, pot, times, k, opts);

    // created density is nonzero near the step
    double center_mass = 0.0;
    for (int j = 0; j < grid.n; ++j) {
        if (std::abs(grid.x(j)) < 0.25) center_mass += runs.back().rho_e[j];
    }
    CHECK(center_mass * grid.dx() > 1e-4);

    // charge symmetry at every recorded time
    for (const auto& d : runs) {
        CHECK(std::abs(d.integral_e() - d.integral_p()) <= 1e-8);
    }

    // total created charge grows over the first few oscillation periods
    for (std::size_t i = 1; i < runs.size(); ++i) {
        CHECK(runs[i].integral_e() >= runs[i - 1].integral_e());
    }
}

TEST_CASE("mode count guards") {
    const auto k = PhysConsts::atomic_units();
    const Grid1D grid = Grid1D::make(64, -1.0, 1.0);
    CHECK_THROWS_AS(ps::pair_mode_sum(grid, PotentialSpec::zero(), 1e-4, k, 65), TooManyModes);

    ps::PairSimOptions opts;
    opts.joint = true;
    const Grid1D big = Grid1D::make(512, -1.0, 1.0);
    CHECK_THROWS_AS(ps::pair_evolution(big, PotentialSpec::zero(), {1e-4}, k, opts),
                    JointTooLarge);
}

TEST_CASE("detect_satellites on synthetic shapes") {
    const Grid1D grid = Grid1D::make(512, -1.0, 1.0);

    SUBCASE("three gaussians with deep gaps") {
        const auto d = synthetic_density(
            grid, {{0.0, 0.02, 1.0}, {-0.3, 0.02, 0.5}, {0.3, 0.02, 0.45}});
        const auto rep = ps::detect_satellites(d);
        CHECK(std::abs(rep.main_peak_x) <= grid.dx());
        CHECK(rep.satellite_xs.size() == 2);
        CHECK(rep.gap_depth < 0.05);
        CHECK(rep.separation == doctest::Approx(0.3).epsilon(0.02));
    }

    SUBCASE("single gaussian has no structure") {
        const auto d = synthetic_density(grid, {{0.1, 0.05, 1.0}});
        CHECK_THROWS_AS(ps::detect_satellites(d), NoStructure);
    }

    SUBCASE("zero density has no structure") {
        const auto d = synthetic_density(grid, {});
        CHECK_THROWS_AS(ps::detect_satellites(d), NoStructure);
    }

    SUBCASE("threshold suppresses small bumps") {
        const auto d = synthetic_density(grid, {{0.0, 0.02, 1.0}, {0.3, 0.02, 0.01}});
        CHECK_THROWS_AS(ps::detect_satellites(d), NoStructure);
        ps::SatelliteDetectOptions opts;
        opts.threshold_frac = 0.005;
        const auto rep = ps::detect_satellites(d, opts);
        CHECK(rep.satellite_xs.size() == 1);
    }

    SUBCASE("window restricts the analysis") {
        const auto d = synthetic_density(
            grid, {{0.0, 0.02, 1.0}, {0.2, 0.02, 0.5}, {0.9, 0.02, 0.8}});
        ps::SatelliteDetectOptions opts;
        opts.window_half_width = 0.45;
        const auto rep = ps::detect_satellites(d, opts);
        CHECK(rep.satellite_xs.size() == 1);
        CHECK(rep.satellite_xs[0] == doctest::Approx(0.2).epsilon(0.05));
    }
}

TEST_CASE("satellite speed on synthetic fronts") {
    const Grid1D grid = Grid1D::make(1024, -1.0, 1.0);
    const auto k = PhysConsts::atomic_units();

    std::vector<ps::PairDensities> runs;
    // pick times so the fronts land exactly on grid points
    const double step_time = grid.dx() / k.c;
    for (int m : {14, 28, 42}) {
        const double t = m * step_time;
        runs.push_back(synthetic_density(grid,
                                         {{0.0, 0.01, 1.0},
                                          {k.c * t, 0.01, 0.4},
                                          {-k.c * t, 0.01, 0.4}},
                                         t));
    }
    const double speed = ps::satellite_speed(runs);
    CHECK(std::abs(speed - k.c) / k.c <= 1e-6);

    CHECK_THROWS_AS(ps::satellite_speed({runs[0], runs[1]}), ConfigInvalid);
}

TEST_CASE("gap existence and subluminal fronts for supercritical steps") {
    const auto k = PhysConsts::atomic_units();
    const Grid1D grid = Grid1D::make(256, -1.0, 1.0);

    ps::SatelliteDetectOptions det;
    det.window_half_width = 0.45;

    ps::PairSimOptions sim;
    sim.dt = 5e-6;
    sim.positron_branch = false;

    for (double f : {2.2, 3.0}) {
        const auto runs = ps::pair_evolution(
            grid, PotentialSpec::tanh_step(f * k.rest_energy(), 0.3 / k.c), {8e-4}, k, sim);
        const auto rep = ps::detect_satellites(runs.front(), det);
        CHECK(rep.gap_depth < 0.5);
    }

    const auto runs = ps::pair_evolution(
        grid, PotentialSpec::tanh_step(2.5 * k.rest_energy(), 0.3 / k.c),
        {4e-4, 6e-4, 8e-4}, k, sim);
    for (const auto& d : runs) {
        const auto rep = ps::detect_satellites(d, det);
        CHECK(rep.gap_depth < 0.5);
    }
    const double speed = ps::satellite_speed(runs, det);
    CHECK(speed <= k.c * 1.05);
    CHECK(speed >= 0.5 * k.c);
}

TEST_CASE("single-time wrapper matches the multi-time driver") {
    const auto k = PhysConsts::atomic_units();
    const Grid1D grid = Grid1D::make(64, -1.0, 1.0);
    const auto pot = PotentialSpec::tanh_step(2.5 * k.rest_energy(), 0.3 / k.c);

    const auto single = ps::pair_mode_sum(grid, pot, 2e-4, k);
    ps::PairSimOptions opts;  // same defaults as the wrapper
    const auto multi = ps::pair_evolution(grid, pot, {2e-4}, k, opts);
    for (int j = 0; j < grid.n; ++j) {
        CHECK(single.rho_e[j] == multi.front().rho_e[j]);
        CHECK(single.rho_p[j] == multi.front().rho_p[j]);
    }
}

TEST_CASE("predicted amplitude vanishes in the strong-field limit") {
    const auto k = PhysConsts::atomic_units();
    const double base = ps::predicted_amplitude(2.5 * k.rest_energy(), k);
    CHECK(base > 0.0);
    CHECK(ps::predicted_amplitude(5.0 * k.rest_energy(), k) < base);
    CHECK(ps::predicted_amplitude(1e9 * k.rest_energy(), k) <= 1e-8 * base);
}

TEST_CASE("mode sum is independent of the thread partition") {
    const auto k = PhysConsts::atomic_units();
    const Grid1D grid = Grid1D::make(64, -1.0, 1.0);
    const auto pot = PotentialSpec::tanh_step(2.5 * k.rest_energy(), 0.3 / k.c);

    ps::PairSimOptions one;
    one.dt = 2e-5;
    one.threads = 1;
    ps::PairSimOptions many = one;
    many.threads = 3;

    const auto a = ps::pair_evolution(grid, pot, {4e-4}, k, one);
    const auto b = ps::pair_evolution(grid, pot, {4e-4}, k, many);
    for (int j = 0; j < grid.n; ++j) {
        CHECK(a.back().rho_e[j] == b.back().rho_e[j]);
        CHECK(a.back().rho_p[j] == b.back().rho_p[j]);
    }
}

TEST_CASE("joint density is nonnegative and vanishes for the vacuum") {
    const auto k = PhysConsts::atomic_units();
    const Grid1D grid = Grid1D::make(64, -1.0, 1.0);

    ps::PairSimOptions opts;
    opts.dt = 2e-5;
    opts.joint = true;

    const auto empty = ps::pair_evolution(grid, PotentialSpec::zero(), {2e-4}, k, opts);
    CHECK(empty.back().joint_n == 64);
    for (double v : empty.back().joint) CHECK(v <= 1e-24);

    const auto pot = PotentialSpec::tanh_step(2.5 * k.rest_energy(), 0.3 / k.c);
    const auto runs = ps::pair_evolution(grid, pot, {4e-4}, k, opts);
    double maxv = 0.0;
    for (double v : runs.back().joint) {
        CHECK(v >= 0.0);
        maxv = std::max(maxv, v);
    }
    CHECK(maxv > 0.0);
}
