// Command-line front end: config ingestion, subcommands, file emission.
//
// Exit codes: 0 success, 1 infeasible design, 2 input error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qgem/designer.hpp"
#include "qgem/errors.hpp"
#include "qgem/io.hpp"

namespace fs = std::filesystem;
using namespace qgem;

namespace {

struct Session {
    ExperimentConfig config;
    fs::path out_dir;
    bool quiet = false;
    std::vector<std::string> outputs;

    void emit(const fs::path& name, const std::string& text) {
        io::write_text(out_dir / name, text);
        outputs.push_back(name.string());
    }
    void note_output(const fs::path& name) { outputs.push_back(name.string()); }
    void finish() {
        const io::RunManifest manifest = io::make_manifest(config, outputs);
        io::write_text(out_dir / "manifest.json", io::manifest_json(manifest));
        if (!quiet)
            std::printf("outputs in %s (config %s)\n", out_dir.string().c_str(),
                        manifest.config_hash.c_str());
    }
    void say(const char* text) {
        if (!quiet) std::fputs(text, stdout);
    }
    void say(const char* fmt, auto first, auto... rest) {
        if (!quiet) std::printf(fmt, first, rest...);
    }
};

std::vector<double> log_grid(double lo, double hi, int points) {
    std::vector<double> g(points);
    const double step = std::log10(hi / lo) / (points - 1);
    for (int i = 0; i < points; ++i) g[i] = lo * std::pow(10.0, step * i);
    return g;
}

std::vector<double> linear_grid(double lo, double hi, int points) {
    std::vector<double> g(points);
    for (int i = 0; i < points; ++i)
        g[i] = lo + (hi - lo) * static_cast<double>(i) / (points - 1);
    return g;
}

int run_feasibility(Session& s) {
    const FeasibilityReport report = designer::feasibility(s.config);
    s.emit("feasibility.json", io::feasibility_json(report));
    s.say("total phase   : %.4g rad (step1 %.3g, step2 %.3g, step3 %.3g)\n",
          report.phase.total, report.phase.step1, report.phase.step2,
          report.phase.step3);
    s.say("split / d     : %.4g um / %.4g um\n", report.split * 1e6,
          report.center_distance * 1e6);
    s.say("s_max         : %.4g um, end gap %.4g um vs recapture %.4g um\n",
          report.s_max * 1e6, report.end_gap * 1e6, report.recapture_gap * 1e6);
    s.say("decoherence   : exponent %.4g (%s dominant), budget %.4g\n",
          report.decoherence.exponent, report.decoherence.dominant_channel.c_str(),
          0.5 * report.phase.total);
    s.say("plate         : deflection %.3g m vs spread %.3g m\n",
          report.plate.deflection_max, report.plate.ground_spread);
    s.say("overall       : %s\n", report.overall ? "FEASIBLE" : "INFEASIBLE");
    s.finish();
    return report.overall ? 0 : 1;
}

int run_min_mass(Session& s) {
    const auto& cfg = s.config;
    double mass = 0.0;
    try {
        mass = designer::min_feasible_mass(
            cfg.geometry.separation_multiplier, cfg.drive.field_gradient,
            cfg.drive.split_time, cfg.drive.flight_time, cfg.phase_target,
            constants::preset(cfg.material), cfg.geometry.plate_thickness,
            cfg.drive.time_step);
    } catch (const NoSolutionError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 1;
    }
    std::string json = "{\n  \"min_mass_kg\": " + io::format_full(mass) +
                       ",\n  \"N\": " + io::format_full(cfg.geometry.separation_multiplier) +
                       ",\n  \"phase_target_rad\": " + io::format_full(cfg.phase_target) +
                       "\n}\n";
    s.emit("min_mass.json", json);
    s.say("minimum feasible mass at N = %g: %.4g kg\n",
          cfg.geometry.separation_multiplier, mass);
    s.finish();
    return 0;
}

int run_trajectory(Session& s) {
    const TrajectoryProfile profile = kinematics::full_profile(
        s.config.mass_spec, s.config.geometry, s.config.drive);
    io::write_trajectory_csv(s.out_dir / "trajectory.csv", profile);
    s.note_output("trajectory.csv");
    s.say("%zu samples over %.4g s; s_max %.4g um, tau1 %.4g s\n",
          profile.times.size(), profile.times.back(), profile.s_max * 1e6,
          profile.tau1);
    s.finish();
    return 0;
}

int run_phase(Session& s) {
    const PhaseBreakdown breakdown = phase::total_phase(s.config);
    s.emit("phase.json", io::phase_json(breakdown));
    s.say("effective entangling phase: %.5g rad\n", breakdown.total);
    s.finish();
    return 0;
}

int run_decoherence(Session& s) {
    const auto& cfg = s.config;
    const TrajectoryProfile profile =
        kinematics::full_profile(cfg.mass_spec, cfg.geometry, cfg.drive);
    const DecoherenceBudget budget = decoherence::budget(
        cfg.environment, cfg.mass_spec, cfg.drive, profile, cfg.im_dielectric);
    const PhaseBreakdown breakdown =
        phase::total_phase(cfg.mass_spec, cfg.geometry, cfg.drive, profile);

    std::string json = io::budget_json(budget);
    // Append the threshold density for the phase-derived budget limit.
    double threshold = std::nan("");
    try {
        threshold = decoherence::threshold_density(cfg.environment, cfg.mass_spec,
                                                   cfg.drive, profile,
                                                   cfg.im_dielectric,
                                                   0.5 * breakdown.total);
    } catch (const NoSolutionError&) {
    }
    json.erase(json.rfind('}'));
    json += "  ,\"budget_limit\": " + io::format_full(0.5 * breakdown.total) +
            ",\n  \"threshold_density_per_m3\": " +
            (std::isnan(threshold) ? "null" : io::format_full(threshold)) + "\n}\n";
    s.emit("decoherence.json", json);

    // Budget scan over the gas density at the config temperature.
    const std::vector<double> densities = log_grid(1e4, 1e10, 61);
    std::vector<double> exponents(densities.size());
    for (std::size_t i = 0; i < densities.size(); ++i) {
        EnvironmentSpec env = cfg.environment;
        env.number_density = densities[i];
        exponents[i] = decoherence::budget(env, cfg.mass_spec, cfg.drive, profile,
                                           cfg.im_dielectric)
                           .exponent;
    }
    io::write_budget_scan_csv(s.out_dir / "decoherence_scan.csv", densities, exponents,
                              0.5 * breakdown.total);
    s.note_output("decoherence_scan.csv");
    s.say("exponent %.4g vs budget %.4g (%s dominant); pressure %.3g Pa\n",
          budget.exponent, 0.5 * breakdown.total, budget.dominant_channel.c_str(),
          decoherence::pressure(cfg.environment));
    if (!std::isnan(threshold))
        s.say("threshold density: %.3g m^-3\n", threshold);
    s.finish();
    return budget.exponent < 0.5 * breakdown.total ? 0 : 1;
}

int run_witness_scan(Session& s) {
    const PhaseBreakdown breakdown = phase::total_phase(s.config);
    const double phi = breakdown.total;
    const std::vector<double> grid = linear_grid(0.0, phi, 201);
    std::vector<double> values(grid.size());
    const SpinState state =
        witness::entangled_state(breakdown.dphi_ud, breakdown.dphi_du);
    for (std::size_t i = 0; i < grid.size(); ++i)
        values[i] = witness::expectation(
            witness::dephase(state, grid[i], s.config.dephasing), s.config.witness_op);
    io::write_witness_scan_csv(s.out_dir / "witness_scan.csv", grid, values);
    s.note_output("witness_scan.csv");
    const double boundary = 0.5 * phi;
    s.say("phase %.4g rad; analytic boundary gamma t = %.4g\n", phi, boundary);
    try {
        const double crossing = witness::witness_zero_crossing(
            breakdown.dphi_ud, breakdown.dphi_du, s.config.witness_op,
            s.config.dephasing);
        s.say("numeric Tr(W rho) = 0 at gamma t = %.4g\n", crossing);
    } catch (const NoSolutionError&) {
        s.say("no Tr(W rho) sign change in the scanned range\n");
    }
    s.finish();
    return 0;
}

int run_plate(Session& s) {
    const auto& cfg = s.config;
    const TrajectoryProfile profile =
        kinematics::full_profile(cfg.mass_spec, cfg.geometry, cfg.drive);
    const PlateAssessment assessment =
        plate::assess(cfg.mass_spec, cfg.geometry, profile, cfg.plate,
                      cfg.placement_uncertainty);
    s.emit("plate.json", io::plate_json(assessment));
    s.say("deflection %.3g m, spread %.3g m, length bound %.3g m: %s\n",
          assessment.deflection_max, assessment.ground_spread,
          assessment.length_bound,
          assessment.which_path_ok ? "no which-path record" : "WHICH-PATH RISK");
    s.finish();
    return assessment.which_path_ok ? 0 : 1;
}

int run_fig(Session& s, int fig) {
    ExperimentConfig cfg = s.config;
    SweepResult sweep;
    std::string name = "fig" + std::to_string(fig) + ".csv";
    switch (fig) {
        case 3:
            cfg.drive.field_gradient = 1e6;
            cfg.drive.flight_time = 2.5;
            sweep = designer::sweep_phase_vs_mass({60, 80, 100, 120, 150},
                                                  log_grid(1e-16, 1e-14, 41), cfg);
            break;
        case 4:
            cfg.drive.field_gradient = 1e4;
            cfg.drive.flight_time = 1.0;
            sweep = designer::sweep_phase_vs_mass({40, 57, 80, 120},
                                                  log_grid(1e-16, 1e-14, 41), cfg);
            break;
        case 5:
            sweep = designer::sweep_decoherence(log_grid(1e4, 1e10, 61), {1.0, 4.0, 10.0},
                                                cfg);
            break;
        case 6:
            sweep = designer::sweep_deflection(linear_grid(0.0, 0.5, 51), cfg);
            break;
    }
    io::write_sweep_csv(s.out_dir / name, sweep, cfg);
    s.config = cfg;  // manifest records the effective config
    s.note_output(name);
    s.say("%zu rows -> %s\n", sweep.rows.size(), name.c_str());
    s.finish();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Design and feasibility engine for Casimir-screened "
                 "gravitational-entanglement interferometry"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::string out_dir = "out";
    bool quiet = false;
    app.add_option("--config", config_path, "flat key=value config file");
    app.add_option("--out", out_dir, "output directory (default: out)");
    app.add_flag("--quiet", quiet, "suppress the summary");

    static const struct { const char* name; const char* desc; } commands[] = {
        {"feasibility", "run every constraint and write feasibility.json"},
        {"min-mass", "smallest feasible mass at the config's N"},
        {"trajectory", "write the three-step trajectory CSV"},
        {"phase", "per-step entangling-phase breakdown"},
        {"decoherence", "decoherence budget and threshold density"},
        {"witness-scan", "Tr(W rho) vs accumulated dephasing"},
        {"plate", "plate deflection / which-path assessment"},
        {"fig3", "step-2 phase vs mass, 1e6 T/m drive"},
        {"fig4", "step-2 phase vs mass, 1e4 T/m drive"},
        {"fig5", "decoherence exponent vs number density"},
        {"fig6", "plate deflection vs placement error"},
    };
    for (const auto& c : commands) app.add_subcommand(c.name, c.desc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit 0, everything else is input error
    }

    Session session;
    session.out_dir = out_dir;
    session.quiet = quiet;
    try {
        session.config = config_path.empty() ? config::flagship()
                                             : config::parse_file(config_path);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    }

    const std::string sub = app.get_subcommands().front()->get_name();
    try {
        if (sub == "feasibility") return run_feasibility(session);
        if (sub == "min-mass") return run_min_mass(session);
        if (sub == "trajectory") return run_trajectory(session);
        if (sub == "phase") return run_phase(session);
        if (sub == "decoherence") return run_decoherence(session);
        if (sub == "witness-scan") return run_witness_scan(session);
        if (sub == "plate") return run_plate(session);
        if (sub == "fig3") return run_fig(session, 3);
        if (sub == "fig4") return run_fig(session, 4);
        if (sub == "fig5") return run_fig(session, 5);
        if (sub == "fig6") return run_fig(session, 6);
    } catch (const CollisionError& e) {
        std::fprintf(stderr, "infeasible: %s\n", e.what());
        return 1;
    } catch (const NoSolutionError& e) {
        std::fprintf(stderr, "infeasible: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
