#include "zitterlab/dynamics.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace zitterlab::dynamics {

namespace {

constexpr double pi = std::numbers::pi;

void fft_components(const Fft& fft, std::vector<Spinor>& vals,
                    std::array<std::vector<Complex>, 4>& scratch, bool inverse) {
    const int n = fft.size();
    for (int comp = 0; comp < 4; ++comp) {
        auto& buf = scratch[static_cast<std::size_t>(comp)];
        buf.resize(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) buf[static_cast<std::size_t>(j)] = vals[static_cast<std::size_t>(j)][comp];
        if (inverse) {
            fft.inverse(buf.data());
        } else {
            fft.forward(buf.data());
        }
        for (int j = 0; j < n; ++j) vals[static_cast<std::size_t>(j)][comp] = buf[static_cast<std::size_t>(j)];
    }
}

}  // namespace

SpinorField init_gaussian(const Grid1D& grid, double x0, double p0, double sigma_x,
                          const GaussianMix& mix, const PhysConsts& k) {
    const double dx = grid.dx();
    if (sigma_x < 4.0 * dx) {
        throw GridTooCoarse("init_gaussian: sigma_x must be >= 4 dx");
    }
    if (x0 - 4.0 * sigma_x < grid.x_min || x0 + 4.0 * sigma_x > grid.x_max) {
        throw GridTooCoarse("init_gaussian: wavepacket support extends outside the grid");
    }
    const double mix_norm = std::norm(mix.c_plus) + std::norm(mix.c_minus);
    if (std::abs(mix_norm - 1.0) > 1e-10) {
        throw BadNormalization("init_gaussian: |c_plus|^2 + |c_minus|^2 must equal 1");
    }

    // Carrier spinor with equal +-energy overlap at p = 0: the +c velocity
    // eigenstate along x with a = b = 1/2.
    const Spinor w = planewave::velocity_eigenstate({Axis::X, Complex(0.5), Complex(0.5), +1});

    SpinorField f;
    f.grid = grid;
    f.values.resize(static_cast<std::size_t>(grid.n));
    for (int j = 0; j < grid.n; ++j) {
        const double x = grid.x(j);
        const double arg = (x - x0) / sigma_x;
        const double env = std::exp(-arg * arg / 4.0);
        const Complex carrier = env * std::exp(iu * (p0 * x / k.hbar));
        f.values[static_cast<std::size_t>(j)] = carrier * w;
    }

    Fft fft(grid.n);
    std::array<std::vector<Complex>, 4> scratch;
    fft_components(fft, f.values, scratch, false);
    for (int kk = 0; kk < grid.n; ++kk) {
        const MomentumPoint p{grid.momentum(kk, k.hbar)};
        auto& v = f.values[static_cast<std::size_t>(kk)];
        const Spinor plus = planewave::apply_energy_projector(v, p, EnergySign::Positive, k);
        const Spinor minus = planewave::apply_energy_projector(v, p, EnergySign::Negative, k);
        v = mix.c_plus * plus + mix.c_minus * minus;
    }
    fft_components(fft, f.values, scratch, true);

    f.normalize();
    f.time = 0.0;
    return f;
}

SplitStepper::SplitStepper(const Grid1D& grid, double dt, const PotentialSpec& pot,
                           const PhysConsts& k)
    : grid_(grid), dt_(dt), has_potential_(!pot.is_zero()), fft_(grid.n) {
    const int n = grid.n;
    if (has_potential_) {
        const auto v = pot.sample(grid);
        half_phase_.resize(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            half_phase_[static_cast<std::size_t>(j)] =
                std::exp(-iu * (v[static_cast<std::size_t>(j)] * dt / (2.0 * k.hbar)));
        }
    }

    kin_diag_.resize(static_cast<std::size_t>(n));
    kin_off_.resize(static_cast<std::size_t>(n));
    const double mc2 = k.m * k.c * k.c;
    for (int kk = 0; kk < n; ++kk) {
        const double p = grid.momentum(kk, k.hbar);
        const double e = std::hypot(mc2, k.c * p);
        const double theta = e * dt / k.hbar;
        const double cth = std::cos(theta);
        const double sth = std::sin(theta);
        // exp(-i h(p) dt/hbar) = cos(theta) I - i sin(theta) h(p)/E
        kin_diag_[static_cast<std::size_t>(kk)] = Complex(cth, -sth * mc2 / e);
        kin_off_[static_cast<std::size_t>(kk)] = Complex(0.0, -sth * k.c * p / e);
    }
}

void SplitStepper::step(SpinorField& field, StepWorkspace& ws) const {
    const int n = grid_.n;
    auto& vals = field.values;

    if (has_potential_) {
        for (int j = 0; j < n; ++j) {
            const Complex ph = half_phase_[static_cast<std::size_t>(j)];
            auto& v = vals[static_cast<std::size_t>(j)];
            for (int i = 0; i < 4; ++i) v[i] *= ph;
        }
    }

    fft_components(fft_, vals, ws.buf, false);
    for (int kk = 0; kk < n; ++kk) {
        const Complex d = kin_diag_[static_cast<std::size_t>(kk)];
        const Complex dbar = std::conj(d);
        const Complex o = kin_off_[static_cast<std::size_t>(kk)];
        auto& v = vals[static_cast<std::size_t>(kk)];
        const Complex a0 = v[0], a1 = v[1], a2 = v[2], a3 = v[3];
        v[0] = d * a0 + o * a3;
        v[1] = d * a1 + o * a2;
        v[2] = o * a1 + dbar * a2;
        v[3] = o * a0 + dbar * a3;
    }
    fft_components(fft_, vals, ws.buf, true);

    if (has_potential_) {
        for (int j = 0; j < n; ++j) {
            const Complex ph = half_phase_[static_cast<std::size_t>(j)];
            auto& v = vals[static_cast<std::size_t>(j)];
            for (int i = 0; i < 4; ++i) v[i] *= ph;
        }
    }

    field.time += dt_;
}

void SplitStepper::step(SpinorField& field) const {
    StepWorkspace ws;
    step(field, ws);
}

void split_step(SpinorField& field, double dt, const PotentialSpec& pot, const PhysConsts& k) {
    SplitStepper stepper(field.grid, dt, pot, k);
    stepper.step(field);
}

SpinorField dense_evolve_oracle(const SpinorField& field, double dt, int n_steps,
                                const PotentialSpec& pot, const PhysConsts& k) {
    const int n = field.grid.n;
    if (n > 128) throw TooLarge("dense_evolve_oracle: grid.n must be <= 128");
    const int dim = 4 * n;

    // H[4j+s][4j'+s'] = (1/n) sum_k exp(2 pi i k (j-j')/n) h(p_k)[s][s'] + V(x_j) delta
    // Precompute the circulant kernel T[d] = (1/n) sum_k e^{2 pi i k d / n} h(p_k).
    std::vector<Mat4> kernel(static_cast<std::size_t>(n));
    for (int d = 0; d < n; ++d) {
        Mat4 t;
        for (int kk = 0; kk < n; ++kk) {
            const MomentumPoint p{field.grid.momentum(kk, k.hbar)};
            const Mat4 h = planewave::momentum_hamiltonian(p, k);
            const double ang = 2.0 * pi * kk * d / n;
            const Complex ph = Complex(std::cos(ang), std::sin(ang)) * (1.0 / n);
            for (int i = 0; i < 16; ++i) t.e[static_cast<std::size_t>(i)] += ph * h.e[static_cast<std::size_t>(i)];
        }
        kernel[static_cast<std::size_t>(d)] = t;
    }

    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(dim, dim);
    const auto v = pot.sample(field.grid);
    for (int j = 0; j < n; ++j) {
        for (int jp = 0; jp < n; ++jp) {
            const Mat4& t = kernel[static_cast<std::size_t>(((j - jp) % n + n) % n)];
            for (int s = 0; s < 4; ++s)
                for (int sp = 0; sp < 4; ++sp) H(4 * j + s, 4 * jp + sp) = t(s, sp);
        }
        for (int s = 0; s < 4; ++s) H(4 * j + s, 4 * j + s) += v[static_cast<std::size_t>(j)];
    }
    H = 0.5 * (H + H.adjoint()).eval();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);

    Eigen::VectorXcd psi(dim);
    for (int j = 0; j < n; ++j)
        for (int s = 0; s < 4; ++s) psi(4 * j + s) = field.values[static_cast<std::size_t>(j)][s];

    const double t_total = dt * n_steps;
    Eigen::VectorXcd coeff = es.eigenvectors().adjoint() * psi;
    for (int i = 0; i < dim; ++i) {
        coeff(i) *= std::exp(-iu * (es.eigenvalues()(i) * t_total / k.hbar));
    }
    psi = es.eigenvectors() * coeff;

    SpinorField out = field;
    for (int j = 0; j < n; ++j)
        for (int s = 0; s < 4; ++s) out.values[static_cast<std::size_t>(j)][s] = psi(4 * j + s);
    out.time = field.time + t_total;
    return out;
}

double mean_position(const SpinorField& field) {
    double s = 0.0;
    for (int j = 0; j < field.grid.n; ++j) {
        s += field.grid.x(j) * field.values[static_cast<std::size_t>(j)].norm2();
    }
    return s * field.grid.dx();
}

double energy_expectation(const SpinorField& field, const PotentialSpec& pot,
                          const PhysConsts& k) {
    const int n = field.grid.n;
    auto vals = field.values;  // copy; transformed in place
    Fft fft(n);
    std::array<std::vector<Complex>, 4> scratch;

    double epot = 0.0;
    if (!pot.is_zero()) {
        const auto v = pot.sample(field.grid);
        for (int j = 0; j < n; ++j) {
            epot += v[static_cast<std::size_t>(j)] * vals[static_cast<std::size_t>(j)].norm2();
        }
        epot *= field.grid.dx();
    }

    fft_components(fft, vals, scratch, false);
    double ekin = 0.0;
    double norm = 0.0;
    for (int kk = 0; kk < n; ++kk) {
        const MomentumPoint p{field.grid.momentum(kk, k.hbar)};
        const Mat4 h = planewave::momentum_hamiltonian(p, k);
        const auto& v = vals[static_cast<std::size_t>(kk)];
        ekin += dot(v, h * v).real();
        norm += v.norm2();
    }
    // Parseval: the common factor cancels in ekin/norm.
    return ekin / norm + epot / field.norm2();
}

planewave::EnergyContent energy_sign_fractions(const SpinorField& field, const PhysConsts& k) {
    const int n = field.grid.n;
    auto vals = field.values;
    Fft fft(n);
    std::array<std::vector<Complex>, 4> scratch;
    fft_components(fft, vals, scratch, false);

    double fp = 0.0, fm = 0.0;
    for (int kk = 0; kk < n; ++kk) {
        const MomentumPoint p{field.grid.momentum(kk, k.hbar)};
        const auto& v = vals[static_cast<std::size_t>(kk)];
        fp += planewave::apply_energy_projector(v, p, EnergySign::Positive, k).norm2();
        fm += planewave::apply_energy_projector(v, p, EnergySign::Negative, k).norm2();
    }
    const double tot = fp + fm;
    return {fp / tot, fm / tot};
}

namespace {

struct LinearTrend {
    double intercept = 0.0;
    double slope = 0.0;
};

LinearTrend fit_line(const std::vector<double>& t, const std::vector<double>& y, std::size_t n) {
    double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        st += t[i];
        sy += y[i];
        stt += t[i] * t[i];
        sty += t[i] * y[i];
    }
    const double d = n * stt - st * st;
    LinearTrend f;
    f.slope = (n * sty - st * sy) / d;
    f.intercept = (sy - f.slope * st) / n;
    return f;
}

void check_uniform_sampling(const ObservableSeries& s) {
    if (s.size() < 32) throw NoPeak("zb_fit: series too short");
    const double dt = s.times[1] - s.times[0];
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        if (std::abs((s.times[i + 1] - s.times[i]) - dt) > 1e-9 * std::abs(dt)) {
            throw ConfigInvalid("zb_fit: series must be uniformly sampled");
        }
    }
}

}  // namespace

double detrended_residual_max(const ObservableSeries& series) {
    const std::size_t n = series.size();
    const auto trend = fit_line(series.times, series.values, n);
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        m = std::max(m, std::abs(series.values[i] - trend.intercept - trend.slope * series.times[i]));
    }
    return m;
}

ZbFit zb_fit(const ObservableSeries& series, const PhysConsts& k) {
    check_uniform_sampling(series);

    // Truncate to a power of two for the spectral pass.
    std::size_t n = 1;
    while (2 * n <= series.size()) n *= 2;

    const auto trend = fit_line(series.times, series.values, n);
    std::vector<Complex> r(n);
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = series.values[i] - trend.intercept - trend.slope * series.times[i];
    }

    Fft fft(static_cast<int>(n));
    fft.forward(r.data());

    const std::size_t half = n / 2;
    std::vector<double> mag(half);
    for (std::size_t kk = 1; kk < half; ++kk) mag[kk] = std::abs(r[kk]);

    std::size_t peak = 1;
    for (std::size_t kk = 2; kk < half; ++kk) {
        if (mag[kk] > mag[peak]) peak = kk;
    }

    std::vector<double> sorted(mag.begin() + 1, mag.end());
    std::nth_element(sorted.begin(), sorted.begin() + static_cast<long>(sorted.size() / 2),
                     sorted.end());
    const double median = sorted[sorted.size() / 2];

    const double ratio = (median > 0.0) ? mag[peak] / median
                                        : std::numeric_limits<double>::infinity();
    if (!(mag[peak] > 5.0 * median)) {
        throw NoPeak("zb_fit: spectral peak below 5x median floor");
    }
    // An oscillation far below the natural length scale is numerical noise,
    // not a measurement.
    if (2.0 * mag[peak] / static_cast<double>(n) < 1e-9 * k.compton_angular()) {
        throw NoPeak("zb_fit: oscillation below numerical precision");
    }

    // Quadratic sub-bin interpolation around the peak.
    double delta = 0.0;
    if (peak + 1 < half && peak >= 2) {
        const double ym = mag[peak - 1], y0 = mag[peak], yp = mag[peak + 1];
        const double den = 2.0 * y0 - ym - yp;
        if (den > 0.0) delta = std::clamp(0.5 * (yp - ym) / den, -0.5, 0.5);
    }

    const double dt = series.times[1] - series.times[0];
    const double omega = 2.0 * pi * (static_cast<double>(peak) + delta) / (static_cast<double>(n) * dt);

    // Joint least-squares fit of [1, t, cos(w t), sin(w t)] over the full
    // series; the sinusoid coefficients give the oscillation amplitude.
    const std::size_t m = series.size();
    double a[4][4] = {};
    double b[4] = {};
    for (std::size_t i = 0; i < m; ++i) {
        const double t = series.times[i];
        const double basis[4] = {1.0, t, std::cos(omega * t), std::sin(omega * t)};
        for (int r2 = 0; r2 < 4; ++r2) {
            b[r2] += basis[r2] * series.values[i];
            for (int c2 = 0; c2 < 4; ++c2) a[r2][c2] += basis[r2] * basis[c2];
        }
    }
    // Gaussian elimination with partial pivoting on the 4x4 normal equations.
    int idx[4] = {0, 1, 2, 3};
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r2 = col + 1; r2 < 4; ++r2) {
            if (std::abs(a[idx[r2]][col]) > std::abs(a[idx[piv]][col])) piv = r2;
        }
        std::swap(idx[col], idx[piv]);
        const double d = a[idx[col]][col];
        for (int r2 = col + 1; r2 < 4; ++r2) {
            const double f = a[idx[r2]][col] / d;
            for (int c2 = col; c2 < 4; ++c2) a[idx[r2]][c2] -= f * a[idx[col]][c2];
            b[idx[r2]] -= f * b[idx[col]];
        }
    }
    double sol[4];
    for (int r2 = 3; r2 >= 0; --r2) {
        double s = b[idx[r2]];
        for (int c2 = r2 + 1; c2 < 4; ++c2) s -= a[idx[r2]][c2] * sol[c2];
        sol[r2] = s / a[idx[r2]][r2];
    }

    ZbFit out;
    out.frequency = omega;
    out.amplitude = std::hypot(sol[2], sol[3]);
    out.peak_ratio = ratio;
    return out;
}

EvolutionResult evolve_recorded(SpinorField field, const PotentialSpec& pot, double dt,
                                long n_steps, int record_every, const PhysConsts& k) {
    SplitStepper stepper(field.grid, dt, pot, k);
    EvolutionResult res;
    res.mean_x.label = "mean_x";
    res.norm2.label = "norm2";
    res.mean_x.push(field.time, mean_position(field));
    res.norm2.push(field.time, field.norm2());
    for (long s = 1; s <= n_steps; ++s) {
        stepper.step(field);
        if (s % record_every == 0) {
            res.mean_x.push(field.time, mean_position(field));
            res.norm2.push(field.time, field.norm2());
        }
    }
    res.final_state = std::move(field);
    return res;
}

void validate_evolution(const Grid1D& grid, double dt, double p0, double sigma_x,
                        const PhysConsts& k) {
    const double zb_period = 2.0 * pi * k.hbar / (2.0 * k.m * k.c * k.c);
    if (!(dt > 0.0) || dt > zb_period / 16.0) {
        throw ConfigInvalid(
            "evolve.dt: must satisfy 0 < dt <= (2 pi hbar / 2 m c^2) / 16 to resolve the "
            "fastest oscillation");
    }
    const double p_cut = pi * k.hbar / grid.dx();
    // The momentum grid must cover the pair threshold and over-resolve the
    // packet's own momentum content.
    if (!(p_cut > 2.0 * k.m * k.c)) {
        throw ConfigInvalid("grid: momentum cutoff pi hbar/dx must exceed 2 m c");
    }
    const double p_packet = std::max(std::abs(p0), k.hbar / (2.0 * sigma_x));
    if (!(p_cut > 8.0 * p_packet)) {
        throw ConfigInvalid(
            "grid: momentum cutoff pi hbar/dx must exceed 8x the packet momentum scale");
    }
}

}  // namespace zitterlab::dynamics
