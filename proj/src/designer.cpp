#include "qgem/designer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qgem/errors.hpp"

namespace qgem::designer {

namespace {

constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();

// One figure-3/4 grid point: integrate the trajectory at (N, m) and collect
// the step-2 phase plus the recapture margin.
struct PhasePoint {
    double phase2 = nan_value;
    bool collided = true;
    bool recapture_ok = false;
    double s_max = nan_value;
    double end_gap = nan_value;
    double recapture_gap = nan_value;
};

PhasePoint phase_point(double N, double mass, const ExperimentConfig& base) {
    PhasePoint out;
    const TestMassSpec spec =
        make_test_mass(mass, constants::preset(base.material));
    const GeometrySpec geom{N, base.geometry.plate_thickness};
    out.recapture_gap = casimir::recapture_gap(spec, base.drive.field_gradient);
    try {
        const TrajectoryProfile profile =
            kinematics::full_profile(spec, geom, base.drive);
        out.collided = false;
        out.s_max = profile.s_max;
        out.end_gap = geom.initial_gap(spec) - profile.s_max;
        out.recapture_ok = out.end_gap >= out.recapture_gap;
        out.phase2 = phase::step2_phase(spec, geom, profile);
    } catch (const CollisionError&) {
    } catch (const GeometryError&) {
        // Gap closed before the fall even started (N R/2 <= W/2).
    }
    return out;
}

std::vector<double> default_N_grid() {
    std::vector<double> grid;
    for (double n = 10.0; n <= 1000.0 * 1.0001; n *= std::pow(10.0, 0.1))
        grid.push_back(n);
    return grid;
}

} // namespace

FeasibilityReport feasibility(const ExperimentConfig& config) {
    config.validate();
    const TestMassSpec& spec = config.mass_spec;
    const DriveSpec& drive = config.drive;
    const GeometrySpec& geom = config.geometry;

    FeasibilityReport r;
    r.split = kinematics::split_size(spec, drive);
    r.center_distance = r.split + geom.inner_separation(spec);
    r.recapture_gap = casimir::recapture_gap(spec, drive.field_gradient);

    TrajectoryProfile profile;
    try {
        profile = kinematics::full_profile(spec, geom, drive);
    } catch (const CollisionError&) {
        return r;  // collided: every flag stays down
    }
    r.collision_ok = true;
    r.s_max = profile.s_max;
    r.tau1 = profile.tau1;
    r.end_gap = geom.initial_gap(spec) - profile.s_max;
    r.recapture_ok = r.end_gap >= r.recapture_gap;

    r.phase = phase::total_phase(spec, geom, drive, profile);
    r.phase_ok = r.phase.total >= config.phase_target;

    r.decoherence = decoherence::budget(config.environment, spec, drive, profile,
                                        config.im_dielectric);
    r.witness_ok =
        witness::detectability(r.phase.total, r.decoherence.exponent, 1.0).detectable;

    r.plate = plate::assess(spec, geom, profile, config.plate,
                            config.placement_uncertainty);

    r.overall = r.collision_ok && r.recapture_ok && r.phase_ok && r.witness_ok &&
                r.plate.which_path_ok;
    return r;
}

double min_feasible_mass(double N, double field_gradient, double tau, double t_int,
                         double phase_target,
                         const constants::MaterialPreset& material,
                         double plate_thickness, double time_step) {
    if (!(phase_target > 0.0))
        throw ValidationError("min_feasible_mass: phase_target must be > 0");
    ExperimentConfig base = config::flagship();
    base.material = std::string(material.name);
    base.drive = DriveSpec{field_gradient, tau, t_int, time_step};
    base.geometry.plate_thickness = plate_thickness;

    const auto feasible = [&](double mass) {
        const PhasePoint p = phase_point(N, mass, base);
        return !p.collided && p.recapture_ok && p.phase2 >= phase_target;
    };

    // The feasible set is a mass window: the recapture and collision margins
    // widen monotonically with m while the step-2 phase is unimodal (the
    // split shrinks as 1/m while N R grows as m^(1/3)). Scan a log grid for
    // any feasible point, then bisect the lower edge.
    constexpr double lo_limit = 1e-18;
    constexpr double hi_limit = 1e-12;
    constexpr int scan_points = 61;
    double lo = lo_limit;
    double found = 0.0;
    if (feasible(lo)) return lo;
    for (int i = 1; i < scan_points; ++i) {
        const double m = lo_limit * std::pow(hi_limit / lo_limit,
                                             static_cast<double>(i) / (scan_points - 1));
        if (feasible(m)) {
            found = m;
            break;
        }
        lo = m;
    }
    if (found == 0.0)
        throw NoSolutionError("min_feasible_mass: no feasible mass in [1e-18, 1e-12] kg");
    double hi = found;
    while (hi / lo > 1.005) {
        const double mid = std::sqrt(lo * hi);
        (feasible(mid) ? hi : lo) = mid;
    }
    return hi;
}

OptimalMass optimal_min_feasible_mass(double field_gradient, double tau, double t_int,
                                      double phase_target,
                                      const constants::MaterialPreset& material,
                                      double plate_thickness, double time_step,
                                      const std::vector<double>& N_grid) {
    const std::vector<double> coarse = N_grid.empty() ? default_N_grid() : N_grid;

    const auto scan = [&](const std::vector<double>& grid) {
        OptimalMass best{std::numeric_limits<double>::infinity(), 0.0};
        for (double N : grid) {
            try {
                const double m = min_feasible_mass(N, field_gradient, tau, t_int,
                                                   phase_target, material,
                                                   plate_thickness, time_step);
                if (m < best.mass) best = {m, N};
            } catch (const NoSolutionError&) {
            }
        }
        return best;
    };

    OptimalMass best = scan(coarse);
    if (!std::isfinite(best.mass))
        throw NoSolutionError("optimal_min_feasible_mass: no N in the grid admits a "
                              "feasible mass");
    // Refine around the best coarse N.
    std::vector<double> fine;
    for (int i = -4; i <= 4; ++i)
        fine.push_back(best.N * std::pow(10.0, 0.025 * i));
    const OptimalMass refined = scan(fine);
    return refined.mass < best.mass ? refined : best;
}

SweepResult sweep_phase_vs_mass(const std::vector<double>& N_values,
                                const std::vector<double>& masses,
                                const ExperimentConfig& base, Execution exec) {
    std::vector<double> Ns = N_values;
    std::vector<double> ms = masses;
    std::sort(Ns.begin(), Ns.end());
    Ns.erase(std::unique(Ns.begin(), Ns.end()), Ns.end());
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());

    SweepResult result;
    result.axis = "mass_kg";
    result.columns = {"N", "mass_kg", "phase2_rad", "feasible",
                      "s_max_m", "end_gap_m", "recapture_gap_m"};
    const std::size_t total = Ns.size() * ms.size();
    result.rows.resize(total);

    [[maybe_unused]] const bool parallel = exec == Execution::parallel;
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(total); ++idx) {
        const double N = Ns[static_cast<std::size_t>(idx) / ms.size()];
        const double m = ms[static_cast<std::size_t>(idx) % ms.size()];
        const PhasePoint p = phase_point(N, m, base);
        const bool feasible = !p.collided && p.recapture_ok;
        result.rows[static_cast<std::size_t>(idx)] = {
            N, m, p.phase2, feasible ? 1.0 : 0.0,
            p.s_max, p.end_gap, p.recapture_gap};
    }
    return result;
}

SweepResult sweep_decoherence(const std::vector<double>& densities,
                              const std::vector<double>& temperatures,
                              const ExperimentConfig& base, Execution exec) {
    base.validate();
    std::vector<double> ns = densities;
    std::vector<double> ts = temperatures;
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    const TrajectoryProfile profile =
        kinematics::full_profile(base.mass_spec, base.geometry, base.drive);
    const PhaseBreakdown phase =
        phase::total_phase(base.mass_spec, base.geometry, base.drive, profile);
    const double limit = 0.5 * phase.total;

    SweepResult result;
    result.axis = "n_V_per_m3";
    result.columns = {"n_V", "T_ex", "exponent", "limit", "pass"};
    const std::size_t total = ns.size() * ts.size();
    result.rows.resize(total);

    [[maybe_unused]] const bool parallel = exec == Execution::parallel;
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(total); ++idx) {
        const double n_V = ns[static_cast<std::size_t>(idx) / ts.size()];
        const double T = ts[static_cast<std::size_t>(idx) % ts.size()];
        EnvironmentSpec env = base.environment;
        env.number_density = n_V;
        env.external_temperature = T;
        const double exponent =
            decoherence::budget(env, base.mass_spec, base.drive, profile,
                                base.im_dielectric)
                .exponent;
        result.rows[static_cast<std::size_t>(idx)] = {
            n_V, T, exponent, limit, exponent <= limit ? 1.0 : 0.0};
    }
    return result;
}

SweepResult sweep_deflection(const std::vector<double>& u_values,
                             const ExperimentConfig& base, Execution exec) {
    base.validate();
    std::vector<double> us = u_values;
    std::sort(us.begin(), us.end());
    us.erase(std::unique(us.begin(), us.end()), us.end());

    const TrajectoryProfile profile =
        kinematics::full_profile(base.mass_spec, base.geometry, base.drive);

    SweepResult result;
    result.axis = "u";
    result.columns = {"u", "deflection"};
    result.rows.resize(us.size());

    [[maybe_unused]] const bool parallel = exec == Execution::parallel;
#pragma omp parallel for schedule(static) if (parallel)
    for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(us.size()); ++idx) {
        const double u = us[static_cast<std::size_t>(idx)];
        const double force =
            plate::max_imbalance_force(base.mass_spec, base.geometry, profile, u);
        result.rows[static_cast<std::size_t>(idx)] = {
            u, plate::deflection(force, base.plate)};
    }
    return result;
}

} // namespace qgem::designer
