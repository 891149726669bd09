#include "zitterlab/pairsim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zitterlab/dynamics.hpp"
#include "zitterlab/fft.hpp"
#include "zitterlab/parallel.hpp"
#include "zitterlab/planewave.hpp"

namespace zitterlab::pairsim {

namespace {

double kahan_sum(const std::vector<double>& v) {
    double s = 0.0, comp = 0.0;
    for (double x : v) {
        const double y = x - comp;
        const double t = s + y;
        comp = (t - s) - y;
        s = t;
    }
    return s;
}

struct ModeSpec {
    double p;
    SpinLabel spin;
};

// Momenta ordered by |p| ascending (positive before negative at equal |p|),
// each carrying both spin labels. Deterministic regardless of thread count.
std::vector<ModeSpec> make_modes(const Grid1D& grid, const PhysConsts& k, int n_momenta) {
    std::vector<double> ps(static_cast<std::size_t>(grid.n));
    for (int i = 0; i < grid.n; ++i) ps[static_cast<std::size_t>(i)] = grid.momentum(i, k.hbar);
    std::sort(ps.begin(), ps.end(), [](double a, double b) {
        if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
        return a > b;
    });
    ps.resize(static_cast<std::size_t>(n_momenta));

    std::vector<ModeSpec> modes;
    modes.reserve(ps.size() * 2);
    for (double p : ps) {
        modes.push_back({p, SpinLabel::Up});
        modes.push_back({p, SpinLabel::Down});
    }
    return modes;
}

std::vector<Spinor> plane_wave_mode(const Grid1D& grid, const ModeSpec& mode, EnergySign sign,
                                    const PhysConsts& k) {
    const Spinor u = planewave::free_eigenspinor({mode.p}, sign, mode.spin, k);
    const double norm = 1.0 / std::sqrt(grid.length());
    std::vector<Spinor> vals(static_cast<std::size_t>(grid.n));
    for (int j = 0; j < grid.n; ++j) {
        const Complex ph = norm * std::exp(iu * (mode.p * grid.x(j) / k.hbar));
        vals[static_cast<std::size_t>(j)] = ph * u;
    }
    return vals;
}

// Results of evolving one branch of the free sea and projecting onto the
// opposite energy sign at each recorded time.
struct BranchResult {
    // density[t][j], already summed over modes in deterministic order
    std::vector<std::vector<double>> density;
    // projected amplitudes at the last recorded time, per mode (joint only)
    std::vector<std::vector<Spinor>> projected_last;
    std::vector<std::vector<Spinor>> antiprojected_last;
};

BranchResult evolve_branch(const Grid1D& grid, const PotentialSpec& pot,
                           const std::vector<long>& record_steps, double dt, const PhysConsts& k,
                           EnergySign initial_sign, int n_momenta, bool keep_projected,
                           int threads) {
    const auto modes = make_modes(grid, k, n_momenta);
    const std::size_t n_modes = modes.size();
    const std::size_t n_times = record_steps.size();
    const std::size_t n = static_cast<std::size_t>(grid.n);
    const EnergySign project_sign =
        (initial_sign == EnergySign::Negative) ? EnergySign::Positive : EnergySign::Negative;

    const dynamics::SplitStepper stepper(grid, dt, pot, k);
    const Fft fft(grid.n);

    // Per-mode density rows keep the final reduction independent of the
    // thread partition.
    std::vector<std::vector<std::vector<double>>> rows(
        n_modes, std::vector<std::vector<double>>(n_times, std::vector<double>(n, 0.0)));
    BranchResult out;
    if (keep_projected) {
        out.projected_last.assign(n_modes, {});
        out.antiprojected_last.assign(n_modes, {});
    }

    parallel_for(n_modes, threads, [&](std::size_t mi) {
        SpinorField field;
        field.grid = grid;
        field.values = plane_wave_mode(grid, modes[mi], initial_sign, k);

        dynamics::StepWorkspace ws;
        std::array<std::vector<Complex>, 4> scratch;
        for (auto& s : scratch) s.resize(n);

        long step = 0;
        for (std::size_t ti = 0; ti < n_times; ++ti) {
            while (step < record_steps[ti]) {
                stepper.step(field, ws);
                ++step;
            }

            // Project mode-wise in momentum space.
            auto vals = field.values;
            for (int comp = 0; comp < 4; ++comp) {
                auto& buf = scratch[static_cast<std::size_t>(comp)];
                for (std::size_t j = 0; j < n; ++j) buf[j] = vals[j][comp];
                fft.forward(buf.data());
                for (std::size_t j = 0; j < n; ++j) vals[j][comp] = buf[j];
            }
            std::vector<Spinor> anti;
            if (keep_projected && ti + 1 == n_times) anti = vals;
            for (std::size_t j = 0; j < n; ++j) {
                const MomentumPoint p{grid.momentum(static_cast<int>(j), k.hbar)};
                vals[j] = planewave::apply_energy_projector(vals[j], p, project_sign, k);
                if (!anti.empty()) {
                    anti[j] = planewave::apply_energy_projector(
                        anti[j], p, initial_sign, k);
                }
            }
            for (int comp = 0; comp < 4; ++comp) {
                auto& buf = scratch[static_cast<std::size_t>(comp)];
                for (std::size_t j = 0; j < n; ++j) buf[j] = vals[j][comp];
                fft.inverse(buf.data());
                for (std::size_t j = 0; j < n; ++j) vals[j][comp] = buf[j];
                if (!anti.empty()) {
                    for (std::size_t j = 0; j < n; ++j) buf[j] = anti[j][comp];
                    fft.inverse(buf.data());
                    for (std::size_t j = 0; j < n; ++j) anti[j][comp] = buf[j];
                }
            }

            auto& row = rows[mi][ti];
            for (std::size_t j = 0; j < n; ++j) row[j] = vals[j].norm2();

            if (keep_projected && ti + 1 == n_times) {
                out.projected_last[mi] = std::move(vals);
                out.antiprojected_last[mi] = std::move(anti);
            }
        }
    });

    // Compensated summation in fixed mode order.
    out.density.assign(n_times, std::vector<double>(n, 0.0));
    for (std::size_t ti = 0; ti < n_times; ++ti) {
        std::vector<double> comp(n, 0.0);
        auto& dst = out.density[ti];
        for (std::size_t mi = 0; mi < n_modes; ++mi) {
            const auto& row = rows[mi][ti];
            for (std::size_t j = 0; j < n; ++j) {
                const double y = row[j] - comp[j];
                const double t = dst[j] + y;
                comp[j] = (t - dst[j]) - y;
                dst[j] = t;
            }
        }
    }
    return out;
}

std::vector<double> assemble_joint(const std::vector<std::vector<Spinor>>& a,
                                   const std::vector<std::vector<Spinor>>& b_raw, int n) {
    // b carries the charge-conjugated antiparticle amplitude.
    const std::size_t nn = static_cast<std::size_t>(n);
    const std::size_t n_modes = a.size();

    std::vector<std::vector<Spinor>> b(n_modes, std::vector<Spinor>(nn));
    for (std::size_t mi = 0; mi < n_modes; ++mi) {
        for (std::size_t j = 0; j < nn; ++j) b[mi][j] = charge_conjugate(b_raw[mi][j]);
    }

    // M_{ss'}(x,y) = sum_n a_n(x)_s b_n(y)_{s'}; rho = sum_{ss'} |M_{ss'}|^2.
    std::vector<std::vector<Complex>> m(16, std::vector<Complex>(nn * nn, Complex{}));
    for (std::size_t mi = 0; mi < n_modes; ++mi) {
        for (std::size_t x = 0; x < nn; ++x) {
            const Spinor& ax = a[mi][x];
            if (ax.norm2() == 0.0) continue;
            for (std::size_t y = 0; y < nn; ++y) {
                const Spinor& by = b[mi][y];
                const std::size_t base = x * nn + y;
                for (int s = 0; s < 4; ++s) {
                    const Complex as = ax[s];
                    if (as == Complex{}) continue;
                    for (int sp = 0; sp < 4; ++sp) {
                        m[static_cast<std::size_t>(4 * s + sp)][base] += as * by[sp];
                    }
                }
            }
        }
    }

    std::vector<double> rho(nn * nn, 0.0);
    for (const auto& comp : m) {
        for (std::size_t i = 0; i < nn * nn; ++i) rho[i] += std::norm(comp[i]);
    }
    return rho;
}

}  // namespace

double PairDensities::integral_e() const { return kahan_sum(rho_e) * grid.dx(); }
double PairDensities::integral_p() const { return kahan_sum(rho_p) * grid.dx(); }

Spinor charge_conjugate(const Spinor& psi) {
    Spinor r;
    r[0] = std::conj(psi[3]);
    r[1] = -std::conj(psi[2]);
    r[2] = -std::conj(psi[1]);
    r[3] = std::conj(psi[0]);
    return r;
}

std::vector<PairDensities> pair_evolution(const Grid1D& grid, const PotentialSpec& pot,
                                          const std::vector<double>& times, const PhysConsts& k,
                                          const PairSimOptions& opts) {
    int n_momenta = (opts.n_momenta <= 0) ? grid.n : opts.n_momenta;
    if (n_momenta > grid.n) throw TooManyModes("pair_evolution: n_modes must be <= grid.n");
    if (opts.joint && grid.n > 256) {
        throw JointTooLarge("pair_evolution: joint density requires grid.n <= 256");
    }
    if (times.empty()) throw ConfigInvalid("pairsim.times: at least one time required");
    for (double t : times) {
        if (!(t >= 0.0)) throw ConfigInvalid("pairsim.times: times must be >= 0");
    }
    if (!std::is_sorted(times.begin(), times.end())) {
        throw ConfigInvalid("pairsim.times: times must be ascending");
    }

    // Snap each requested time to a whole number of steps.
    std::vector<long> record_steps;
    record_steps.reserve(times.size());
    for (double t : times) record_steps.push_back(std::lround(t / opts.dt));

    const auto electron = evolve_branch(grid, pot, record_steps, opts.dt, k,
                                        EnergySign::Negative, n_momenta, opts.joint,
                                        opts.threads);
    BranchResult positron;
    if (opts.positron_branch) {
        positron = evolve_branch(grid, pot, record_steps, opts.dt, k, EnergySign::Positive,
                                 n_momenta, false, opts.threads);
    }

    std::vector<PairDensities> out(times.size());
    for (std::size_t ti = 0; ti < times.size(); ++ti) {
        auto& d = out[ti];
        d.grid = grid;
        d.time = static_cast<double>(record_steps[ti]) * opts.dt;
        d.rho_e = electron.density[ti];
        d.rho_p = opts.positron_branch ? positron.density[ti]
                                       : std::vector<double>(static_cast<std::size_t>(grid.n), 0.0);
    }

    if (opts.joint) {
        out.back().joint =
            assemble_joint(electron.projected_last, electron.antiprojected_last, grid.n);
        out.back().joint_n = grid.n;
    }
    return out;
}

PairDensities pair_mode_sum(const Grid1D& grid, const PotentialSpec& pot, double t,
                            const PhysConsts& k, int n_modes) {
    PairSimOptions opts;
    opts.n_momenta = n_modes;
    auto runs = pair_evolution(grid, pot, {t}, k, opts);
    return std::move(runs.front());
}

SatelliteReport detect_satellites(const PairDensities& d, const SatelliteDetectOptions& opts) {
    const auto& rho = d.rho_e;
    const int n = d.grid.n;

    int j0 = 0, j1 = n - 1;
    if (opts.window_half_width > 0.0) {
        j0 = std::max(0, static_cast<int>(std::ceil(
                             (opts.window_center - opts.window_half_width - d.grid.x_min) /
                             d.grid.dx())));
        j1 = std::min(n - 1, static_cast<int>(std::floor(
                                 (opts.window_center + opts.window_half_width - d.grid.x_min) /
                                 d.grid.dx())));
    }
    if (j1 - j0 < 4) throw NoStructure("detect_satellites: analysis window too narrow");

    double maxrho = 0.0;
    for (int j = j0; j <= j1; ++j) maxrho = std::max(maxrho, rho[static_cast<std::size_t>(j)]);
    if (!(maxrho > 0.0)) throw NoStructure("detect_satellites: density is identically zero");

    const double threshold = opts.threshold_frac * maxrho;

    struct Peak {
        int j;
        double h;
    };
    std::vector<Peak> candidates;
    for (int j = j0 + 1; j < j1; ++j) {
        const double h = rho[static_cast<std::size_t>(j)];
        if (h <= threshold) continue;
        if (h >= rho[static_cast<std::size_t>(j - 1)] && h > rho[static_cast<std::size_t>(j + 1)]) {
            candidates.push_back({j, h});
        }
    }
    // Tallest first; suppress anything closer than min_separation_pts to a
    // kept peak.
    std::sort(candidates.begin(), candidates.end(), [](const Peak& a, const Peak& b) {
        if (a.h != b.h) return a.h > b.h;
        return a.j < b.j;
    });
    std::vector<Peak> peaks;
    for (const auto& c : candidates) {
        bool keep = true;
        for (const auto& p : peaks) {
            if (std::abs(c.j - p.j) < opts.min_separation_pts) {
                keep = false;
                break;
            }
        }
        if (keep) peaks.push_back(c);
    }

    if (peaks.size() < 2) {
        throw NoStructure("detect_satellites: no satellite peaks beyond the main body");
    }

    const Peak main = peaks.front();
    std::vector<Peak> satellites(peaks.begin() + 1, peaks.end());
    std::sort(satellites.begin(), satellites.end(), [&](const Peak& a, const Peak& b) {
        return std::abs(a.j - main.j) < std::abs(b.j - main.j);
    });

    SatelliteReport rep;
    rep.time = d.time;
    rep.main_peak_x = d.grid.x(main.j);
    for (const auto& s : satellites) rep.satellite_xs.push_back(d.grid.x(s.j));
    rep.separation = std::abs(rep.satellite_xs.front() - rep.main_peak_x);

    const Peak& nearest = satellites.front();
    const int lo = std::min(main.j, nearest.j);
    const int hi = std::max(main.j, nearest.j);
    double gap = std::numeric_limits<double>::infinity();
    for (int j = lo + 1; j < hi; ++j) gap = std::min(gap, rho[static_cast<std::size_t>(j)]);
    rep.gap_depth = std::isfinite(gap) ? gap / maxrho : 1.0;
    return rep;
}

double satellite_speed(const std::vector<SatelliteReport>& reports) {
    if (reports.size() < 3) {
        throw ConfigInvalid("satellite_speed: need at least 3 time samples");
    }
    double st = 0.0, sd = 0.0, stt = 0.0, std_ = 0.0;
    const double nn = static_cast<double>(reports.size());
    for (const auto& r : reports) {
        double outermost = 0.0;
        for (double x : r.satellite_xs) {
            outermost = std::max(outermost, std::abs(x - r.main_peak_x));
        }
        st += r.time;
        sd += outermost;
        stt += r.time * r.time;
        std_ += r.time * outermost;
    }
    return (nn * std_ - st * sd) / (nn * stt - st * st);
}

double satellite_speed(const std::vector<PairDensities>& runs,
                       const SatelliteDetectOptions& opts) {
    std::vector<SatelliteReport> reports;
    reports.reserve(runs.size());
    for (const auto& d : runs) reports.push_back(detect_satellites(d, opts));
    return satellite_speed(reports);
}

double predicted_amplitude(double v0, const PhysConsts& k) {
    return k.hbar * k.c / (2.0 * (k.rest_energy() + v0 / 2.0));
}

std::vector<ScanRow> amplitude_vs_field(const Grid1D& grid, const ScanOptions& opts,
                                        const PhysConsts& k) {
    if (opts.values.size() < 2) {
        throw ConfigInvalid("scan.values: at least 2 scan points required");
    }
    const double critical = 2.0 * k.rest_energy();

    std::vector<ScanRow> rows;
    rows.reserve(opts.values.size());
    for (double value : opts.values) {
        const double v0 = (opts.kind == ScanKind::V0) ? value : opts.fixed_v0;
        const double w = (opts.kind == ScanKind::V0) ? opts.fixed_w : value;
        if (!(v0 > critical)) {
            throw ConfigInvalid("scan: every V0 must be supercritical (> 2 m c^2)");
        }
        PairSimOptions sim = opts.sim;
        sim.positron_branch = false;  // the scan only reads rho_e
        sim.joint = false;
        const auto runs =
            pair_evolution(grid, PotentialSpec::tanh_step(v0, w), {opts.time}, k, sim);
        const auto rep = detect_satellites(runs.front(), opts.detect);

        ScanRow row;
        row.parameter = value;
        row.separation = rep.separation;
        row.predicted = predicted_amplitude(v0, k);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace zitterlab::pairsim
