#include "zitterlab/runner.hpp"

#include <cmath>
#include <filesystem>
#include <numbers>
#include <sstream>
#include <iostream>
#include <random>
#include <vector>

#include <json.hpp>

#include "zitterlab/algebra.hpp"
#include "zitterlab/dynamics.hpp"
#include "zitterlab/electrocalc.hpp"
#include "zitterlab/io.hpp"
#include "zitterlab/pairsim.hpp"
#include "zitterlab/planewave.hpp"

namespace zitterlab::cli {

namespace pw = zitterlab::planewave;

namespace {

using Json = nlohmann::ordered_json;

struct KeySpec {
    const char* key;
    Json def;
};

Json load_config(const std::string& path) {
    Json j;
    try {
        j = Json::parse(io::read_text_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigInvalid(std::string("config: not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigInvalid("config: top level must be a JSON object");
    return j;
}

bool type_compatible(const Json& def, const Json& given) {
    if (def.is_number() && given.is_number()) return true;
    if (def.is_string() && given.is_string()) return true;
    if (def.is_boolean() && given.is_boolean()) return true;
    if (def.is_array() && given.is_array()) {
        for (const auto& v : given) {
            if (!v.is_number()) return false;
        }
        return true;
    }
    return false;
}

// Defaults first, explicit keys override; unknown keys are rejected by name.
Json resolve_config(const Json& given, const std::vector<KeySpec>& schema) {
    Json resolved = Json::object();
    for (const auto& spec : schema) resolved[spec.key] = spec.def;
    for (const auto& [key, value] : given.items()) {
        if (!resolved.contains(key)) {
            throw ConfigInvalid("config: unknown key '" + key + "'");
        }
        if (!type_compatible(resolved[key], value)) {
            throw ConfigInvalid("config: wrong type for key '" + key + "'");
        }
        resolved[key] = value;
    }
    return resolved;
}

PhysConsts make_consts(const std::string& units) {
    if (units == "au") return PhysConsts::atomic_units();
    if (units == "si") return PhysConsts::si();
    if (units == "natural") return PhysConsts::natural();
    throw ConfigInvalid("units: must be one of au, si, natural");
}

PotentialSpec make_potential(const Json& cfg, const Grid1D& grid) {
    const std::string kind = cfg.at("potential.kind").get<std::string>();
    if (kind == "zero") return PotentialSpec::zero();
    if (kind == "tanh") {
        return PotentialSpec::tanh_step(cfg.at("potential.V0").get<double>(),
                                        cfg.at("potential.W").get<double>());
    }
    if (kind == "table") {
        auto table = cfg.at("potential.table").get<std::vector<double>>();
        if (static_cast<int>(table.size()) != grid.n) {
            throw ConfigInvalid("potential.table: length must equal grid.n");
        }
        return PotentialSpec::from_table(std::move(table));
    }
    throw ConfigInvalid("potential.kind: must be one of zero, tanh, table");
}

Json consts_json(const PhysConsts& k) {
    Json j = Json::object();
    j["system"] = to_string(k.system);
    j["hbar"] = k.hbar;
    j["c"] = k.c;
    j["m"] = k.m;
    j["e"] = k.e;
    j["eps0"] = k.eps0;
    return j;
}

void write_metadata(const std::string& out_dir, const std::string& command, const Json& resolved,
                    const PhysConsts& k, const Json& notes) {
    Json meta = Json::object();
    meta["command"] = command;
    meta["defaults_version"] = 1;
    meta["config"] = resolved;
    meta["constants"] = consts_json(k);
    meta["notes"] = notes;
    meta["config_hash"] = io::git_blob_sha1(resolved.dump());
    io::write_text_file(out_dir + "/metadata.json", meta.dump(2) + "\n");
}

std::string series_csv(const ObservableSeries& s) {
    std::string out = "t,value\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += io::csv_line({io::format_double(s.times[i]), io::format_double(s.values[i])});
    }
    return out;
}

std::string snapshot_csv(const SpinorField& f) {
    std::string out = "x,re_psi1,re_psi2,re_psi3,re_psi4,im_psi1,im_psi2,im_psi3,im_psi4,density\n";
    for (int j = 0; j < f.grid.n; ++j) {
        const auto& v = f.values[static_cast<std::size_t>(j)];
        std::vector<std::string> cells;
        cells.push_back(io::format_double(f.grid.x(j)));
        for (int i = 0; i < 4; ++i) cells.push_back(io::format_double(v[i].real()));
        for (int i = 0; i < 4; ++i) cells.push_back(io::format_double(v[i].imag()));
        cells.push_back(io::format_double(v.norm2()));
        out += io::csv_line(cells);
    }
    return out;
}

std::string densities_csv(const pairsim::PairDensities& d) {
    std::string out = "x,rho_e,rho_p\n";
    for (int j = 0; j < d.grid.n; ++j) {
        out += io::csv_line({io::format_double(d.grid.x(j)),
                             io::format_double(d.rho_e[static_cast<std::size_t>(j)]),
                             io::format_double(d.rho_p[static_cast<std::size_t>(j)])});
    }
    return out;
}

std::string joint_matrix_file(const pairsim::PairDensities& d) {
    const int n = d.joint_n;
    std::string out = io::csv_line({std::to_string(n), std::to_string(n),
                                    io::format_double(d.grid.dx()), io::format_double(d.grid.dx())});
    for (int i = 0; i < n; ++i) {
        std::vector<std::string> cells;
        cells.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            cells.push_back(io::format_double(d.joint[static_cast<std::size_t>(i * n + j)]));
        }
        out += io::csv_line(cells);
    }
    return out;
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Spinor random_spinor(std::mt19937_64& rng) {
    // Box-Muller normals in all eight real components, then normalize.
    Spinor v;
    for (int i = 0; i < 4; ++i) {
        const double u1 = std::max(uniform01(rng), 1e-16);
        const double u2 = uniform01(rng);
        const double r = std::sqrt(-2.0 * std::log(u1));
        v[i] = Complex(r * std::cos(2.0 * std::numbers::pi * u2), r * std::sin(2.0 * std::numbers::pi * u2));
    }
    return normalized(v);
}

Mat4 random_hermitian(std::mt19937_64& rng) {
    Mat4 a;
    for (int i = 0; i < 4; ++i) {
        a(i, i) = 2.0 * uniform01(rng) - 1.0;
        for (int j = i + 1; j < 4; ++j) {
            const Complex z(2.0 * uniform01(rng) - 1.0, 2.0 * uniform01(rng) - 1.0);
            a(i, j) = z;
            a(j, i) = std::conj(z);
        }
    }
    return a;
}

// ---------------------------------------------------------------- algebra-check

const std::vector<KeySpec> kAlgebraSchema = {
    {"units", "au"},
    {"seed", 12345},
    {"check.samples", 200},
};

void run_algebra_check(const Json& cfg, const RunContext& ctx, const PhysConsts& k) {
    (void)k;
    Json checks = Json::array();
    bool all_pass = true;
    auto add = [&](const std::string& name, double measured, double bound) {
        const bool pass = measured <= bound;
        all_pass = all_pass && pass;
        Json c = Json::object();
        c["check"] = name;
        c["measured"] = measured;
        c["bound"] = bound;
        c["pass"] = pass;
        checks.push_back(c);
    };

    const auto dm = algebra::dirac_matrices();
    const char* names[3] = {"alpha_x", "alpha_y", "alpha_z"};
    const Mat4 ident = Mat4::identity();
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const Mat4 ac = algebra::anticommutator(dm.alpha[static_cast<std::size_t>(i)],
                                                    dm.alpha[static_cast<std::size_t>(j)]);
            const Mat4 expect = (i == j) ? 2.0 * ident : Mat4::zero();
            add(std::string("{") + names[i] + "," + names[j] + "} - 2 delta I",
                max_abs_diff(ac, expect), 1e-12);
        }
        add(std::string("{") + names[i] + ",beta}",
            max_abs(algebra::anticommutator(dm.alpha[static_cast<std::size_t>(i)], dm.beta)),
            1e-12);
        add(std::string(names[i]) + " trace",
            std::abs(trace(dm.alpha[static_cast<std::size_t>(i)])), 1e-12);
        add(std::string(names[i]) + " hermiticity",
            algebra::hermiticity_defect(dm.alpha[static_cast<std::size_t>(i)]), 1e-12);

        const auto es = algebra::eigen_hermitian(dm.alpha[static_cast<std::size_t>(i)]);
        const double spec_dev =
            std::max(std::max(std::abs(es.values[0] + 1.0), std::abs(es.values[1] + 1.0)),
                     std::max(std::abs(es.values[2] - 1.0), std::abs(es.values[3] - 1.0)));
        add(std::string(names[i]) + " spectrum {-1,-1,1,1}", spec_dev, 1e-12);
    }
    add("beta^2 - I", max_abs_diff(dm.beta * dm.beta, ident), 1e-12);
    add("beta trace", std::abs(trace(dm.beta)), 1e-12);
    add("beta hermiticity", algebra::hermiticity_defect(dm.beta), 1e-12);
    {
        const auto es = algebra::eigen_hermitian(dm.beta);
        const double dev =
            std::max(std::max(std::abs(es.values[0] + 1.0), std::abs(es.values[1] + 1.0)),
                     std::max(std::abs(es.values[2] - 1.0), std::abs(es.values[3] - 1.0)));
        add("beta spectrum {-1,-1,1,1}", dev, 1e-12);
    }

    std::mt19937_64 rng(cfg.at("seed").get<std::uint64_t>());
    const int samples = cfg.at("check.samples").get<int>();
    double worst_reconstruct = 0.0;
    for (int s = 0; s < samples; ++s) {
        const Mat4 a = random_hermitian(rng);
        const auto es = algebra::eigen_hermitian(a);
        Mat4 rebuilt;
        for (int m = 0; m < 4; ++m) {
            const auto& v = es.vectors[static_cast<std::size_t>(m)];
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c)
                    rebuilt(r, c) += es.values[static_cast<std::size_t>(m)] * v[r] * std::conj(v[c]);
        }
        worst_reconstruct = std::max(worst_reconstruct, max_abs_diff(rebuilt, a));
    }
    add("random hermitian reconstruction", worst_reconstruct, 1e-9);

    double worst_velocity = 0.0;
    double worst_eigen_residual = 0.0;
    for (int s = 0; s < samples; ++s) {
        const Spinor psi = random_spinor(rng);
        const double v = dot(psi, dm.alpha[0] * psi).real();
        worst_velocity = std::max(worst_velocity, std::abs(v) - 1.0);

        const double u = uniform01(rng) * 0.5;
        const pw::VelocityEigenstateSpec spec{Axis::X, Complex(std::sqrt(u)),
                                              Complex(std::sqrt(0.5 - u)), +1};
        const Spinor vx = pw::velocity_eigenstate(spec);
        const Spinor r = dm.alpha[0] * vx - Complex(1.0) * vx;
        worst_eigen_residual = std::max(worst_eigen_residual, r.norm());
    }
    add("velocity expectation bound |<alpha_x>| <= 1", worst_velocity, 1e-12);
    add("velocity eigenstate residual", worst_eigen_residual, 1e-12);

    Json report = Json::object();
    report["checks"] = checks;
    report["all_pass"] = all_pass;
    io::write_text_file(ctx.out_dir + "/report.json", report.dump(2) + "\n");

    if (!all_pass) throw Error("algebra-check: at least one identity check failed");
}

// ----------------------------------------------------------------------- zitter

const std::vector<KeySpec> kZitterSchema = {
    {"units", "au"},
    {"seed", 12345},
    {"grid.n", 1024},
    {"grid.x_min", -4.0},
    {"grid.x_max", 4.0},
    {"init.x0", 0.0},
    {"init.p0", 0.0},
    {"init.sigma_x", 0.5},
    {"init.mix_plus_re", std::numbers::sqrt2 / 2.0},
    {"init.mix_plus_im", 0.0},
    {"init.mix_minus_re", std::numbers::sqrt2 / 2.0},
    {"init.mix_minus_im", 0.0},
    {"evolve.dt", 1.0e-5},
    {"evolve.n_steps", 2048},
    {"evolve.record_every", 1},
    {"potential.kind", "zero"},
    {"potential.V0", 0.0},
    {"potential.W", 1.0},
    {"potential.table", Json::array()},
};

void require_explicit_scales(const Json& given, const std::string& units,
                             const std::vector<const char*>& keys) {
    if (units == "au") return;
    // Desk-scale defaults are atomic-units numbers; any other system must pin
    // its own scales.
    for (const char* key : keys) {
        if (!given.contains(key)) {
            throw ConfigInvalid(std::string("config: '") + key +
                                "' must be given explicitly for non-au unit systems");
        }
    }
}

void run_zitter(const Json& cfg, const RunContext& ctx, const PhysConsts& k) {
    const Grid1D grid = Grid1D::make(cfg.at("grid.n").get<int>(), cfg.at("grid.x_min").get<double>(),
                                     cfg.at("grid.x_max").get<double>());
    const double dt = cfg.at("evolve.dt").get<double>();
    const long n_steps = cfg.at("evolve.n_steps").get<long>();
    const int record_every = cfg.at("evolve.record_every").get<int>();
    if (n_steps < 1) throw ConfigInvalid("evolve.n_steps: must be >= 1");
    if (record_every < 1) throw ConfigInvalid("evolve.record_every: must be >= 1");

    const double p0 = cfg.at("init.p0").get<double>();
    const double sigma = cfg.at("init.sigma_x").get<double>();
    dynamics::validate_evolution(grid, dt, p0, sigma, k);

    const dynamics::GaussianMix mix{
        Complex(cfg.at("init.mix_plus_re").get<double>(), cfg.at("init.mix_plus_im").get<double>()),
        Complex(cfg.at("init.mix_minus_re").get<double>(),
                cfg.at("init.mix_minus_im").get<double>())};
    const PotentialSpec pot = make_potential(cfg, grid);

    SpinorField field =
        dynamics::init_gaussian(grid, cfg.at("init.x0").get<double>(), p0, sigma, mix, k);
    auto result = dynamics::evolve_recorded(std::move(field), pot, dt, n_steps, record_every, k);

    io::write_text_file(ctx.out_dir + "/mean_x.csv", series_csv(result.mean_x));
    io::write_text_file(ctx.out_dir + "/norm2.csv", series_csv(result.norm2));
    io::write_text_file(ctx.out_dir + "/final_state.csv", snapshot_csv(result.final_state));

    Json fit = Json::object();
    fit["expected_frequency"] = 2.0 * k.rest_energy() / k.hbar;
    fit["expected_amplitude"] = k.hbar / (2.0 * k.m * k.c);
    try {
        const auto zb = dynamics::zb_fit(result.mean_x, k);
        fit["peak"] = true;
        fit["frequency"] = zb.frequency;
        fit["amplitude"] = zb.amplitude;
        fit["peak_ratio"] = zb.peak_ratio;
    } catch (const NoPeak&) {
        fit["peak"] = false;
        fit["residual_max"] = dynamics::detrended_residual_max(result.mean_x);
    }
    io::write_text_file(ctx.out_dir + "/fit.json", fit.dump(2) + "\n");

    if (ctx.emit_svg) {
        io::write_text_file(ctx.out_dir + "/mean_x.svg",
                            io::svg_line_plot(result.mean_x, "t (a.u.)", "<x> (a.u.)"));
    }
}

// ---------------------------------------------------------------------- pairsim

const std::vector<KeySpec> kPairsimSchema = {
    {"units", "au"},
    {"seed", 12345},
    {"grid.n", 512},
    {"grid.x_min", -1.0},
    {"grid.x_max", 1.0},
    {"potential.kind", "tanh"},
    {"potential.V0", 0.0},  // 0 sentinel -> 2.5 m c^2
    {"potential.W", 0.0},   // 0 sentinel -> 0.3 hbar/(m c)
    {"potential.table", Json::array()},
    {"evolve.dt", 5.0e-6},
    {"pairsim.times", Json::array({2.0e-4, 4.0e-4, 6.0e-4, 8.0e-4})},
    {"pairsim.n_modes", 0},
    {"pairsim.positron", true},
    {"pairsim.joint", false},
    {"detect.threshold_frac", 0.05},
    {"detect.min_separation_pts", 3},
    {"detect.window_frac", 0.45},
};

pairsim::SatelliteDetectOptions make_detect(const Json& cfg, const Grid1D& grid) {
    pairsim::SatelliteDetectOptions d;
    d.threshold_frac = cfg.at("detect.threshold_frac").get<double>();
    d.min_separation_pts = cfg.at("detect.min_separation_pts").get<int>();
    const double frac = cfg.at("detect.window_frac").get<double>();
    if (frac > 0.0) {
        d.window_center = 0.5 * (grid.x_min + grid.x_max);
        d.window_half_width = frac * 0.5 * grid.length();
    }
    return d;
}

Json report_json(const pairsim::SatelliteReport& rep) {
    Json r = Json::object();
    r["time"] = rep.time;
    r["main_peak_x"] = rep.main_peak_x;
    r["satellite_xs"] = rep.satellite_xs;
    r["separation"] = rep.separation;
    r["gap_depth"] = rep.gap_depth;
    return r;
}

void run_pairsim(const Json& cfg, const RunContext& ctx, const PhysConsts& k) {
    const Grid1D grid = Grid1D::make(cfg.at("grid.n").get<int>(), cfg.at("grid.x_min").get<double>(),
                                     cfg.at("grid.x_max").get<double>());

    Json cfg2 = cfg;
    if (cfg2.at("potential.V0").get<double>() == 0.0 &&
        cfg2.at("potential.kind").get<std::string>() == "tanh") {
        cfg2["potential.V0"] = 2.5 * k.rest_energy();
    }
    if (cfg2.at("potential.W").get<double>() == 0.0 &&
        cfg2.at("potential.kind").get<std::string>() == "tanh") {
        cfg2["potential.W"] = 0.3 * k.compton_angular();
    }
    const PotentialSpec pot = make_potential(cfg2, grid);

    pairsim::PairSimOptions opts;
    opts.dt = cfg.at("evolve.dt").get<double>();
    opts.n_momenta = cfg.at("pairsim.n_modes").get<int>();
    opts.positron_branch = cfg.at("pairsim.positron").get<bool>();
    opts.joint = cfg.at("pairsim.joint").get<bool>();
    const auto times = cfg.at("pairsim.times").get<std::vector<double>>();
    dynamics::validate_evolution(grid, opts.dt, 0.0, grid.length() / 8.0, k);

    const auto runs = pairsim::pair_evolution(grid, pot, times, k, opts);

    const auto detect = make_detect(cfg, grid);
    Json sats = Json::array();
    std::vector<pairsim::SatelliteReport> reports;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        io::write_text_file(ctx.out_dir + "/densities_" + std::to_string(i) + ".csv",
                            densities_csv(runs[i]));
        try {
            const auto rep = pairsim::detect_satellites(runs[i], detect);
            reports.push_back(rep);
            sats.push_back(report_json(rep));
        } catch (const NoStructure& e) {
            Json r = Json::object();
            r["time"] = runs[i].time;
            r["error"] = e.what();
            sats.push_back(r);
        }
    }

    Json summary = Json::object();
    summary["reports"] = sats;
    summary["integral_e_last"] = runs.back().integral_e();
    summary["integral_p_last"] = runs.back().integral_p();
    if (reports.size() >= 3) {
        summary["satellite_speed"] = pairsim::satellite_speed(reports);
    }
    io::write_text_file(ctx.out_dir + "/satellites.json", summary.dump(2) + "\n");

    if (opts.joint) {
        io::write_text_file(ctx.out_dir + "/joint.txt", joint_matrix_file(runs.back()));
        if (ctx.emit_svg) {
            io::write_text_file(
                ctx.out_dir + "/joint.svg",
                io::svg_heatmap(runs.back().joint, runs.back().joint_n, grid.x_min, grid.x_max,
                                grid.x_min, grid.x_max, "pair density"));
        }
    }
    if (ctx.emit_svg) {
        ObservableSeries rho;
        rho.label = "rho_e";
        const auto& last = runs.back();
        for (int j = 0; j < grid.n; ++j) {
            rho.push(grid.x(j), last.rho_e[static_cast<std::size_t>(j)]);
        }
        io::write_text_file(ctx.out_dir + "/rho_e.svg",
                            io::svg_line_plot(rho, "x (a.u.)", "rho_e"));
    }
}

// ------------------------------------------------------------------------- scan

const std::vector<KeySpec> kScanSchema = {
    {"units", "au"},
    {"seed", 12345},
    {"grid.n", 512},
    {"grid.x_min", -1.0},
    {"grid.x_max", 1.0},
    {"scan.kind", "V0"},
    {"scan.values", Json::array()},  // empty -> desk defaults for the kind
    {"scan.time", 5.0e-4},
    {"potential.V0", 0.0},  // fixed V0 for W scans; 0 sentinel -> 2.5 m c^2
    {"potential.W", 0.0},   // fixed W for V0 scans; 0 sentinel -> 0.3 hbar/(m c)
    {"evolve.dt", 5.0e-6},
    {"pairsim.n_modes", 0},
    {"detect.threshold_frac", 0.05},
    {"detect.min_separation_pts", 3},
    {"detect.window_frac", 0.45},
};

void run_scan(const Json& cfg, const RunContext& ctx, const PhysConsts& k) {
    const Grid1D grid = Grid1D::make(cfg.at("grid.n").get<int>(), cfg.at("grid.x_min").get<double>(),
                                     cfg.at("grid.x_max").get<double>());

    pairsim::ScanOptions opts;
    const std::string kind = cfg.at("scan.kind").get<std::string>();
    if (kind == "V0") {
        opts.kind = pairsim::ScanKind::V0;
    } else if (kind == "W") {
        opts.kind = pairsim::ScanKind::W;
    } else {
        throw ConfigInvalid("scan.kind: must be V0 or W");
    }

    opts.values = cfg.at("scan.values").get<std::vector<double>>();
    if (opts.values.empty()) {
        if (opts.kind == pairsim::ScanKind::V0) {
            for (double f : {2.2, 2.5, 3.0, 4.0}) opts.values.push_back(f * k.rest_energy());
        } else {
            for (double f : {0.3, 0.1, 0.03}) opts.values.push_back(f * k.compton_angular());
        }
    }
    opts.fixed_v0 = cfg.at("potential.V0").get<double>();
    if (opts.fixed_v0 == 0.0) opts.fixed_v0 = 2.5 * k.rest_energy();
    opts.fixed_w = cfg.at("potential.W").get<double>();
    if (opts.fixed_w == 0.0) opts.fixed_w = 0.3 * k.compton_angular();
    opts.time = cfg.at("scan.time").get<double>();
    opts.sim.dt = cfg.at("evolve.dt").get<double>();
    opts.sim.n_momenta = cfg.at("pairsim.n_modes").get<int>();
    opts.detect = make_detect(cfg, grid);
    dynamics::validate_evolution(grid, opts.sim.dt, 0.0, grid.length() / 8.0, k);

    const auto rows = pairsim::amplitude_vs_field(grid, opts, k);

    std::string csv = "param,measured_separation,predicted_amplitude\n";
    for (const auto& row : rows) {
        csv += io::csv_line({io::format_double(row.parameter), io::format_double(row.separation),
                             io::format_double(row.predicted)});
    }
    io::write_text_file(ctx.out_dir + "/scan.csv", csv);
}

// ------------------------------------------------------------------------- calc

const std::vector<KeySpec> kCalcSchema = {
    {"units", "au"},
    {"seed", 12345},
};

void run_calc(const Json& cfg, const RunContext& ctx, const PhysConsts& k) {
    (void)cfg;
    if (k.system == UnitSystem::Natural) {
        throw ConfigInvalid("units: calc requires au or si (natural carries no absolute scale)");
    }
    namespace ec = electrocalc;

    Json out = Json::object();
    out["unit_system"] = to_string(k.system);
    out["fine_structure_alpha"] = k.fine_structure();

    const double phi = ec::self_potential(k);
    const auto zb = ec::zb_self_energy(k);
    out["self_potential"] = phi;
    out["self_energy"] = zb.value;
    out["self_energy_ev"] = ec::to_ev(zb);
    out["self_energy_kev"] = ec::to_ev(zb) / 1e3;
    out["electromagnetic_mass_ratio"] = ec::electromagnetic_mass(k) / k.m;

    const double r_half = k.hbar / (2.0 * k.m * k.c);
    const auto shell = ec::shell_model_energy(r_half, k);
    out["shell_energy_at_hbar_over_2mc"] = shell.value;
    out["shell_vs_self_energy_rel"] = std::abs(shell.value - zb.value) / zb.value;

    const auto darwin = ec::darwin_shift_s_state(1, 1, k);
    const auto darwin_conv = ec::darwin_shift_s_state_conventional(1, 1, k);
    out["darwin_h_1s"] = darwin.value;
    out["darwin_h_1s_ev"] = ec::to_ev(darwin);
    out["darwin_h_1s_conventional"] = darwin_conv.value;
    out["darwin_prefactor_ratio"] = darwin.value / darwin_conv.value;

    out["compton_h_over_mc"] = ec::compton_wavelength(ec::ComptonVariant::HOverMc, k).value;
    out["compton_hbar_over_mc"] = ec::compton_wavelength(ec::ComptonVariant::HbarOverMc, k).value;
    out["compton_hbar_over_2mc"] =
        ec::compton_wavelength(ec::ComptonVariant::HbarOver2Mc, k).value;
    out["zb_displacement_at_rest"] = std::sqrt(planewave::xdagx_eigenvalue(k.rest_energy(), k));

    // Conversion anchors between the two systems.
    using ec::Dimension;
    const auto len = ec::unit_convert({0.05, Dimension::Length, UnitSystem::AtomicUnits},
                                      UnitSystem::SI);
    const auto tim = ec::unit_convert({8.0e-4, Dimension::Time, UnitSystem::AtomicUnits},
                                      UnitSystem::SI);
    out["anchor_length_0p05au_m"] = len.value;
    out["anchor_time_8em4au_s"] = tim.value;
    out["anchor_speed_direct_m_per_s"] =
        ec::unit_convert({0.10 / 8.0e-4, Dimension::Velocity, UnitSystem::AtomicUnits},
                         UnitSystem::SI)
            .value;
    out["anchor_speed_nominal_m_per_s"] =
        ec::round_sig(ec::round_sig(0.10 * codata::bohr, 2) / ec::round_sig(tim.value, 2), 2);

    io::write_text_file(ctx.out_dir + "/calc.json", out.dump(2) + "\n");

    std::ostringstream table;
    table << "quantity                          value\n";
    for (const auto& [key, value] : out.items()) {
        table << key;
        for (std::size_t i = key.size(); i < 34; ++i) table << ' ';
        if (value.is_number()) {
            table << io::format_double(value.get<double>());
        } else {
            table << value.dump();
        }
        table << '\n';
    }
    std::cout << table.str();
    io::write_text_file(ctx.out_dir + "/calc.txt", table.str());
}

Json notes_for(const std::string& command) {
    Json notes = Json::array();
    if (command == "zitter") {
        notes.push_back(
            "oscillation amplitude is measured as a least-squares sinusoid fit at the "
            "interpolated DFT peak of the detrended <x>(t) series");
    }
    if (command == "pairsim" || command == "scan") {
        notes.push_back("positive/negative frequency split uses the free-field projectors");
        notes.push_back(
            "satellite analysis is restricted to a central window (detect.window_frac) because "
            "the periodic wrap of the step potential creates a spurious edge at the box "
            "boundary");
        notes.push_back("the switch-on at t = 0 is sudden; no ramp factor is applied");
    }
    return notes;
}

}  // namespace

void run(const RunContext& ctx) {
    const Json given = load_config(ctx.config_path);

    const std::vector<KeySpec>* schema = nullptr;
    if (ctx.command == "algebra-check") {
        schema = &kAlgebraSchema;
    } else if (ctx.command == "zitter") {
        schema = &kZitterSchema;
    } else if (ctx.command == "pairsim") {
        schema = &kPairsimSchema;
    } else if (ctx.command == "scan") {
        schema = &kScanSchema;
    } else if (ctx.command == "calc") {
        schema = &kCalcSchema;
    } else {
        throw ConfigInvalid("command: must be one of algebra-check, zitter, pairsim, scan, calc");
    }

    const Json resolved = resolve_config(given, *schema);
    const std::string units = resolved.at("units").get<std::string>();
    const PhysConsts k = make_consts(units);
    if (ctx.command == "zitter") {
        require_explicit_scales(given, units,
                                {"grid.x_min", "grid.x_max", "evolve.dt", "init.sigma_x"});
    } else if (ctx.command == "pairsim") {
        require_explicit_scales(given, units,
                                {"grid.x_min", "grid.x_max", "evolve.dt", "pairsim.times"});
    } else if (ctx.command == "scan") {
        require_explicit_scales(given, units,
                                {"grid.x_min", "grid.x_max", "evolve.dt", "scan.time"});
    }

    std::filesystem::create_directories(ctx.out_dir);

    if (ctx.command == "algebra-check") {
        run_algebra_check(resolved, ctx, k);
    } else if (ctx.command == "zitter") {
        run_zitter(resolved, ctx, k);
    } else if (ctx.command == "pairsim") {
        run_pairsim(resolved, ctx, k);
    } else if (ctx.command == "scan") {
        run_scan(resolved, ctx, k);
    } else {
        run_calc(resolved, ctx, k);
    }

    write_metadata(ctx.out_dir, ctx.command, resolved, k, notes_for(ctx.command));
}

int run_with_exit_code(const RunContext& ctx) {
    try {
        run(ctx);
        return 0;
    } catch (const ConfigInvalid& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "runtime error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace zitterlab::cli
