// Batch front end: experiment subcommands over the betaplane library.
// Every run writes into <out>/<run-id>/ and is byte-reproducible for a fixed
// config and thread count.

#include <omp.h>

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <limits>

#include "betaplane/analysis.hpp"
#include "betaplane/checkpoint.hpp"
#include "betaplane/evolution.hpp"
#include "betaplane/fft.hpp"
#include "betaplane/initial_data.hpp"
#include "betaplane/norms.hpp"
#include "betaplane/operators.hpp"
#include "betaplane/picard.hpp"
#include "betaplane/run_config.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace betaplane;

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// RFC-4180 style: comma separated, CRLF, leading header row.
struct CsvWriter {
    std::ofstream out;
    explicit CsvWriter(const fs::path& p) : out(p, std::ios::binary) {
        if (!out) throw ConfigError("cannot open " + p.string());
    }
    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out << ',';
            out << cells[i];
        }
        out << "\r\n";
    }
};

void write_json(const fs::path& p, const json& j) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw ConfigError("cannot open " + p.string());
    out << j.dump(2) << "\n";
}

RealField build_initial(const RunConfig& cfg, const GridSpec& g) {
    RealField f(g);
    if (cfg.family == "gaussian")
        f = gaussian_bump(g, cfg.mass, cfg.width, cfg.center_x, cfg.center_y);
    else if (cfg.family == "dipole")
        f = dipole(g, cfg.amplitude, cfg.width, cfg.center_x, cfg.center_y);
    else if (cfg.family == "ring")
        f = radial_ring(g, cfg.amplitude, cfg.radius, cfg.width);
    else
        f = random_band_limited(g, cfg.seed, cfg.band_lo, cfg.band_hi, cfg.amplitude);
    if (cfg.scale_to_smallness) {
        if (cfg.beta == 0.0)
            throw ConfigError("initial.scale_to_smallness requires beta != 0");
        const double current = smallness_value(forward_transform(f), cfg.beta, cfg.delta);
        if (current == 0.0) throw ConfigError("cannot rescale zero data to a smallness target");
        const double s = *cfg.scale_to_smallness / current;
        for (double& v : f.values) v *= s;
    }
    return f;
}

ExponentTuple tuple_from(const RunConfig& cfg) {
    ExponentTuple t;
    t.delta = cfg.delta;
    if (cfg.exponents_canonical) {
        const double p = canonical_p(cfg.delta);
        t.p1 = t.p2 = p;
        t.r1 = 6.0 / (1.0 - cfg.delta);
        t.r2 = 6.0 / (1.0 + 5.0 * cfg.delta);
    } else {
        t.p1 = cfg.p1;
        t.r1 = cfg.r1;
        t.p2 = cfg.p2;
        t.r2 = cfg.r2;
    }
    return t;
}

std::vector<double> log_spaced(double lo, double hi, std::size_t m) {
    std::vector<double> t(m);
    for (std::size_t i = 0; i < m; ++i)
        t[i] = lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(m - 1));
    return t;
}

fs::path run_dir(const RunConfig& cfg) {
    fs::path dir = fs::path(cfg.output_dir) / cfg.run_id;
    fs::create_directories(dir);
    return dir;
}

json config_echo(const RunConfig& cfg) {
    return json{{"grid_n", cfg.grid_n},
                {"box_length", cfg.box_length},
                {"beta", cfg.beta},
                {"delta", cfg.delta},
                {"family", cfg.family},
                {"seed", cfg.seed},
                {"dt", cfg.dt},
                {"t_end", cfg.t_end},
                {"scheme", cfg.scheme},
                {"linear_only", cfg.linear_only},
                {"run_id", cfg.run_id}};
}

// Exact linear flow on the uniform step grid (accumulated one-step
// multipliers), mirroring evolve's bookkeeping for energy checks.
Trajectory linear_evolve(const SpectralField& w0, double beta, double dt,
                         double t_end, std::size_t save_every) {
    const std::size_t nsteps = static_cast<std::size_t>(std::llround(t_end / dt));
    if (std::abs(static_cast<double>(nsteps) * dt - t_end) > 1e-9 * std::max(t_end, 1.0))
        throw ConfigError("linear run: t_end must be an integer multiple of dt");
    Trajectory traj;
    traj.beta = beta;
    traj.dt = dt;
    const Symbol E = semigroup_symbol(w0.grid, SemigroupParams{beta, dt});
    SpectralField w = w0;
    auto record = [&](double t) {
        traj.step_times.push_back(t);
        traj.dissipation_series.push_back(dissipation_rate(w));
        traj.l2_series.push_back(l2_norm_spectral(w));
    };
    traj.times.push_back(0.0);
    traj.snapshots.push_back(w);
    record(0.0);
    for (std::size_t step = 1; step <= nsteps; ++step) {
        w = apply_symbol(w, E);
        const double t = static_cast<double>(step) * dt;
        record(t);
        if (step % save_every == 0 || step == nsteps) {
            traj.times.push_back(t);
            traj.snapshots.push_back(w);
        }
    }
    return traj;
}

Trajectory run_trajectory(const RunConfig& cfg, const SpectralField& w0) {
    if (cfg.linear_only)
        return linear_evolve(w0, cfg.beta, cfg.dt, cfg.t_end, cfg.save_every);
    EvolveConfig ec;
    ec.beta = cfg.beta;
    ec.dt = cfg.dt;
    ec.t_end = cfg.t_end;
    ec.scheme = cfg.scheme == "etdrk4" ? Scheme::ETDRK4 : Scheme::ETDEuler;
    ec.save_every = cfg.save_every;
    ec.dealias = cfg.dealias;
    return evolve(w0, ec);
}

std::size_t nearest_snapshot(const Trajectory& traj, double t) {
    std::size_t best = 0;
    double gap = inf;
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        const double d = std::abs(traj.times[i] - t);
        if (d < gap) {
            gap = d;
            best = i;
        }
    }
    return best;
}

std::string norm_label(double s, double a) {
    return "W_" + fmt(s) + "_" + (std::isinf(a) ? std::string("inf") : fmt(a));
}

int cmd_simulate(const RunConfig& cfg) {
    GridSpec g(cfg.grid_n, cfg.box_length);
    RealField w0r = build_initial(cfg, g);
    SpectralField w0 = forward_transform(w0r);
    Trajectory traj = run_trajectory(cfg, w0);
    const fs::path dir = run_dir(cfg);

    CsvWriter csv(dir / "norms.csv");
    std::vector<std::string> head{"t"};
    for (auto [s, a] : cfg.norms) head.push_back(norm_label(s, a));
    head.push_back("dissipation");
    csv.row(head);
    double boundary_peak = 0.0;
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        std::vector<std::string> cells{fmt(traj.times[i])};
        for (auto [s, a] : cfg.norms)
            cells.push_back(fmt(sobolev_norm(traj.snapshots[i], s, a)));
        const std::size_t step_idx = nearest_snapshot(traj, traj.times[i]);
        (void)step_idx;
        // dissipation at the saved time comes from the per-step series
        std::size_t si = 0;
        for (std::size_t j = 0; j < traj.step_times.size(); ++j)
            if (std::abs(traj.step_times[j] - traj.times[i]) < 1e-12) si = j;
        cells.push_back(fmt(traj.dissipation_series[si]));
        csv.row(cells);
        boundary_peak = std::max(
            boundary_peak, boundary_mass(inverse_transform_nocheck(traj.snapshots[i])).fraction);
    }

    json index = json::array();
    for (std::size_t c = 0; c < cfg.checkpoint_times.size(); ++c) {
        const std::size_t i = nearest_snapshot(traj, cfg.checkpoint_times[c]);
        char name[48];
        std::snprintf(name, sizeof name, "checkpoint_%03zu.bpf", c);
        checkpoint_write(dir / name, inverse_transform_nocheck(traj.snapshots[i]),
                         traj.times[i], cfg.beta);
        index.push_back({{"file", name}, {"t", traj.times[i]}});
    }

    EnergyLedger led = energy_check(traj);
    json summary{{"config", config_echo(cfg)},
                 {"energy",
                  {{"e0", led.e0},
                   {"e_t", led.e_t},
                   {"dissipated", led.dissipated},
                   {"residual", led.residual},
                   {"degenerate", led.degenerate}}},
                 {"boundary_mass_peak", boundary_peak},
                 {"validity_window_t_max", cfg.box_length * cfg.box_length / 16.0},
                 {"t_end", cfg.t_end},
                 {"checkpoints", index}};
    write_json(dir / "summary.json", summary);
    std::cout << "simulate: wrote " << (dir / "summary.json").string() << "\n";
    return 0;
}

int cmd_decay(const RunConfig& cfg) {
    GridSpec g(cfg.grid_n, cfg.box_length);
    SpectralField w0 = forward_transform(build_initial(cfg, g));
    const fs::path dir = run_dir(cfg);

    std::vector<double> times;
    std::vector<SpectralField> fields;
    if (cfg.linear_only) {
        times = log_spaced(cfg.fit_t_lo, cfg.fit_t_hi, cfg.samples);
        for (double t : times)
            fields.push_back(semigroup_propagate(w0, SemigroupParams{cfg.beta, t}));
    } else {
        Trajectory traj = run_trajectory(cfg, w0);
        for (std::size_t i = 0; i < traj.times.size(); ++i) {
            if (traj.times[i] < cfg.fit_t_lo || traj.times[i] > cfg.fit_t_hi) continue;
            times.push_back(traj.times[i]);
            fields.push_back(traj.snapshots[i]);
        }
    }

    CsvWriter csv(dir / "normalized.csv");
    csv.row({"t", "s", "a", "norm", "normalized"});
    json fits = json::array();
    const double crossover = cfg.beta == 0.0 ? inf : std::pow(std::abs(cfg.beta), -2.0 / 3.0);
    for (auto [s, a] : cfg.norms) {
        std::vector<double> norms;
        for (std::size_t i = 0; i < times.size(); ++i) {
            double nv = cfg.oversample && std::isinf(a) && s == 0.0
                            ? sup_norm_oversampled(fields[i])
                            : sobolev_norm(fields[i], s, a);
            norms.push_back(nv);
            csv.row({fmt(times[i]), fmt(s), std::isinf(a) ? "inf" : fmt(a), fmt(nv),
                     fmt(nv / rate_M(s, a, cfg.beta, times[i]))});
        }
        DecayFit fit = fit_decay(times, norms, cfg.fit_t_lo, cfg.fit_t_hi);
        RatePrediction rp = RatePrediction::make(s, a, cfg.beta);
        fit.predicted_early = rp.early_exponent;
        fit.predicted_late = rp.late_exponent;
        std::string branch = "mixed";
        if (cfg.fit_t_lo >= 5.0 * crossover)
            branch = "late";
        else if (cfg.fit_t_hi <= crossover / 5.0)
            branch = "early";
        fits.push_back({{"s", s},
                        {"a", std::isinf(a) ? json("inf") : json(a)},
                        {"slope", fit.slope},
                        {"intercept", fit.intercept},
                        {"r_squared", fit.r_squared},
                        {"predicted_early", fit.predicted_early},
                        {"predicted_late", fit.predicted_late},
                        {"crossover_time", crossover == inf ? json("inf") : json(crossover)},
                        {"branch_window", branch},
                        {"window", {cfg.fit_t_lo, cfg.fit_t_hi}},
                        {"samples", fit.times.size()}});
    }
    write_json(dir / "decay.json", json{{"config", config_echo(cfg)}, {"fits", fits}});
    std::cout << "decay: wrote " << (dir / "decay.json").string() << "\n";
    return 0;
}

int cmd_asymptotics(const RunConfig& cfg) {
    GridSpec g(cfg.grid_n, cfg.box_length);
    SpectralField w0 = forward_transform(build_initial(cfg, g));
    const double mass = w0.coeffs[0].real();
    const fs::path dir = run_dir(cfg);

    std::vector<double> times = cfg.checkpoint_times;
    std::vector<SpectralField> fields;
    if (cfg.linear_only) {
        for (double t : times)
            fields.push_back(semigroup_propagate(w0, SemigroupParams{cfg.beta, t}));
    } else {
        Trajectory traj = run_trajectory(cfg, w0);
        std::vector<double> actual;
        for (double t : times) {
            const std::size_t i = nearest_snapshot(traj, t);
            actual.push_back(traj.times[i]);
            fields.push_back(traj.snapshots[i]);
        }
        times = actual;
    }

    CsvWriter csv(dir / "deficits.csv");
    csv.row({"t", "s", "a", "deficit"});
    json verdicts = json::array();
    for (auto [s, a] : cfg.norms) {
        std::vector<double> defs;
        for (std::size_t i = 0; i < times.size(); ++i) {
            defs.push_back(asymptotic_deficit(fields[i], mass, cfg.beta, times[i], s, a));
            csv.row({fmt(times[i]), fmt(s), std::isinf(a) ? "inf" : fmt(a), fmt(defs.back())});
        }
        bool nonincreasing = true;
        for (std::size_t i = 0; i + 1 < defs.size(); ++i)
            if (defs[i + 1] > defs[i] * (1.0 + 1e-12)) nonincreasing = false;
        verdicts.push_back({{"s", s},
                            {"a", std::isinf(a) ? json("inf") : json(a)},
                            {"deficits", defs},
                            {"nonincreasing", nonincreasing},
                            {"last_over_first", defs.empty() || defs.front() == 0.0
                                                    ? json(0.0)
                                                    : json(defs.back() / defs.front())}});
    }
    write_json(dir / "asymptotics.json",
               json{{"config", config_echo(cfg)}, {"mass", mass}, {"checkpoints", times},
                    {"verdicts", verdicts}});
    std::cout << "asymptotics: wrote " << (dir / "asymptotics.json").string() << "\n";
    return 0;
}

int cmd_strichartz(const RunConfig& cfg) {
    GridSpec g(cfg.grid_n, cfg.box_length);
    SpectralField w0 = forward_transform(build_initial(cfg, g));
    const fs::path dir = run_dir(cfg);
    std::vector<double> grid(cfg.str_samples + 1);
    for (std::size_t i = 0; i < grid.size(); ++i)
        grid[i] = cfg.str_t_end * static_cast<double>(i) / static_cast<double>(cfg.str_samples);
    StrichartzResult res =
        strichartz_quadrature(w0, cfg.beta, cfg.str_s, cfg.str_p, cfg.str_r, grid);
    write_json(dir / "strichartz.json",
               json{{"config", config_echo(cfg)},
                    {"s", cfg.str_s},
                    {"p", cfg.str_p},
                    {"r", cfg.str_r},
                    {"t_end", cfg.str_t_end},
                    {"value", res.value},
                    {"tail_fraction", res.tail_fraction},
                    {"beta_exponent", strichartz_exponent(cfg.str_s, cfg.str_p, cfg.str_r)}});
    std::cout << "strichartz: wrote " << (dir / "strichartz.json").string() << "\n";
    return 0;
}

int cmd_dispersive(const RunConfig& cfg) {
    GridSpec g(cfg.grid_n, cfg.box_length);
    SpectralField w0 = forward_transform(build_initial(cfg, g));
    LPBank bank = LPBank::make(g);
    const fs::path dir = run_dir(cfg);
    std::vector<double> tg = log_spaced(cfg.disp_t_lo, cfg.disp_t_hi, cfg.disp_samples);
    DispersiveScan scan = dispersive_scan(w0, cfg.beta, cfg.k_set, tg, bank);
    CsvWriter csv(dir / "dispersive.csv");
    csv.row({"k", "t", "ratio"});
    for (std::size_t ik = 0; ik < scan.k_set.size(); ++ik)
        for (std::size_t it = 0; it < scan.times.size(); ++it)
            csv.row({std::to_string(scan.k_set[ik]), fmt(scan.times[it]), fmt(scan.at(ik, it))});
    write_json(dir / "dispersive.json",
               json{{"config", config_echo(cfg)}, {"sup", scan.sup}});
    std::cout << "dispersive: wrote " << (dir / "dispersive.csv").string() << "\n";
    return 0;
}

json ineq(const Ineq& q) { return json{{"ok", q.ok}, {"slack", q.slack}}; }

json report_json(const ExponentTuple& t, const AdmissibilityReport& r) {
    return json{{"tuple",
                 {{"delta", t.delta}, {"p1", t.p1}, {"r1", t.r1}, {"p2", t.p2}, {"r2", t.r2}}},
                {"delta_strict", ineq(r.delta_strict)},
                {"product_bound", ineq(r.product_bound)},
                {"r1_lower", ineq(r.r1_lower)},
                {"r1_upper", ineq(r.r1_upper)},
                {"r2_lower", ineq(r.r2_lower)},
                {"r2_upper", ineq(r.r2_upper)},
                {"r2_branch", r.r2_branch_strict ? "r2>2" : "r2=2"},
                {"r2_window_lower", ineq(r.r2_window_lower)},
                {"r2_window_upper", ineq(r.r2_window_upper)},
                {"reg_r1", ineq(r.reg_r1)},
                {"reg_r2", ineq(r.reg_r2)},
                {"decay_delta", ineq(r.decay_delta)},
                {"decay_extra", ineq(r.decay_extra)},
                {"p_canonical", r.p_canonical},
                {"thm_wellposed", r.thm1_1},
                {"thm_smoothing", r.thm1_2},
                {"thm_decay", r.thm1_3}};
}

int cmd_admissible(const RunConfig& cfg, int sweep) {
    const fs::path dir = run_dir(cfg);
    if (sweep > 0) {
        json rows = json::array();
        for (int i = 0; i < sweep; ++i) {
            const double d = 0.2 * static_cast<double>(i) / static_cast<double>(sweep - 1);
            RunConfig c = cfg;
            c.delta = d;
            c.exponents_canonical = true;
            const ExponentTuple t = tuple_from(c);
            rows.push_back(report_json(t, check_admissible(t)));
        }
        write_json(dir / "admissible.json", json{{"sweep", rows}});
        std::cout << "admissible: wrote sweep of " << sweep << " tuples\n";
        return 0;
    }
    const ExponentTuple t = tuple_from(cfg);
    const AdmissibilityReport r = check_admissible(t);
    write_json(dir / "admissible.json", report_json(t, r));
    std::cout << "admissible: wellposed=" << (r.thm1_1 ? "true" : "false")
              << " smoothing=" << (r.thm1_2 ? "true" : "false")
              << " decay=" << (r.thm1_3 ? "true" : "false") << "\n";
    return 0;
}

int cmd_picard(const RunConfig& cfg) {
    GridSpec g(cfg.grid_n, cfg.box_length);
    SpectralField w0 = forward_transform(build_initial(cfg, g));
    const ExponentTuple t = tuple_from(cfg);
    const double small = cfg.beta != 0.0 ? smallness_value(w0, cfg.beta, cfg.delta) : 0.0;
    PicardResult res =
        picard_solve(w0, cfg.beta, t, cfg.t_end, cfg.picard_iterations, cfg.picard_dt);
    const fs::path dir = run_dir(cfg);
    checkpoint_write(dir / "picard_final.bpf", inverse_transform_nocheck(res.final_iterate),
                     cfg.t_end, cfg.beta);
    write_json(dir / "picard.json",
               json{{"config", config_echo(cfg)},
                    {"exponents",
                     {{"delta", t.delta}, {"p1", t.p1}, {"r1", t.r1}, {"p2", t.p2}, {"r2", t.r2}}},
                    {"smallness_value", small},
                    {"iterate_count", res.report.iterate_count},
                    {"y1_norms", res.report.y1_norms},
                    {"y2_norms", res.report.y2_norms},
                    {"d_distances", res.report.d_distances},
                    {"contraction_ratios", res.report.contraction_ratios},
                    {"contractive", res.report.contractive}});
    std::cout << "picard: wrote " << (dir / "picard.json").string() << "\n";
    return 0;
}

int cmd_energy(const RunConfig& cfg) {
    GridSpec g(cfg.grid_n, cfg.box_length);
    SpectralField w0 = forward_transform(build_initial(cfg, g));
    Trajectory traj = run_trajectory(cfg, w0);
    EnergyLedger led = energy_check(traj);
    const fs::path dir = run_dir(cfg);
    write_json(dir / "energy.json", json{{"config", config_echo(cfg)},
                                         {"e0", led.e0},
                                         {"e_t", led.e_t},
                                         {"dissipated", led.dissipated},
                                         {"residual", led.residual},
                                         {"degenerate", led.degenerate}});
    std::cout << "energy: residual = " << fmt(led.residual) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pseudo-spectral laboratory for the viscous beta-plane vorticity equation"};
    app.require_subcommand(1);

    std::string config_path, out_dir, run_id;
    bool linear_only = false;
    int threads = 0;
    int sweep = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "key=value config file");
        sub->add_option("--out", out_dir, "output directory (overrides output.dir)");
        sub->add_option("--run-id", run_id, "run identifier (overrides run.id)");
        sub->add_flag("--linear-only", linear_only, "propagate with the linear semigroup only");
        sub->add_option("--threads", threads, "OpenMP thread count (0 keeps the default)");
        return sub;
    };

    auto* sim = add_common(app.add_subcommand("simulate", "evolve and write checkpoints + norm series"));
    auto* dec = add_common(app.add_subcommand("decay", "fit decay slopes of norm series"));
    auto* asy = add_common(app.add_subcommand("asymptotics", "kernel-profile deficit at checkpoints"));
    auto* str = add_common(app.add_subcommand("strichartz", "space-time norm quadrature"));
    auto* dis = add_common(app.add_subcommand("dispersive", "dispersive ratio scan on dyadic blocks"));
    auto* adm = add_common(app.add_subcommand("admissible", "exponent admissibility report"));
    adm->add_option("--sweep", sweep, "canonical-family delta sweep with N points");
    auto* pic = add_common(app.add_subcommand("picard", "Duhamel fixed-point iteration report"));
    auto* ene = add_common(app.add_subcommand("energy", "energy identity ledger for a run"));

    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig cfg;
        if (!config_path.empty()) cfg = load_config(config_path);
        else if (!adm->parsed()) throw ConfigError("--config is required");
        if (!out_dir.empty()) cfg.output_dir = out_dir;
        if (!run_id.empty()) cfg.run_id = run_id;
        if (linear_only) cfg.linear_only = true;
        if (threads > 0) cfg.threads = threads;
        if (cfg.threads > 0) omp_set_num_threads(cfg.threads);

        if (sim->parsed()) return cmd_simulate(cfg);
        if (dec->parsed()) return cmd_decay(cfg);
        if (asy->parsed()) return cmd_asymptotics(cfg);
        if (str->parsed()) return cmd_strichartz(cfg);
        if (dis->parsed()) return cmd_dispersive(cfg);
        if (adm->parsed()) return cmd_admissible(cfg, sweep);
        if (pic->parsed()) return cmd_picard(cfg);
        if (ene->parsed()) return cmd_energy(cfg);
        return 2;
    } catch (const BlowUpError& e) {
        std::cerr << "blow-up: " << e.what() << "\n";
        return 3;
    } catch (const AnalysisError& e) {
        std::cerr << "analysis error: " << e.what() << "\n";
        return 4;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const FormatError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
