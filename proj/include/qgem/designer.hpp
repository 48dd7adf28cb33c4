#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgem/config.hpp"
#include "qgem/phase.hpp"

// Parameter-space search and sweeps: the all-constraints feasibility check,
// minimum-feasible-mass search, and the figure-data grids (step-2 phase vs
// mass, decoherence vs number density, deflection vs placement error).
//
// Grid evaluation is embarrassingly parallel: every grid point is a pure
// function of its parameters. The OpenMP kernel writes each row into its own
// slot, so serial and parallel execution produce bit-identical results; the
// serial path is kept as the reference implementation and for the benchmark.

namespace qgem {

struct FeasibilityReport {
    PhaseBreakdown phase;
    bool recapture_ok = false;   // end-of-fall gap >= recapture gap
    bool collision_ok = false;   // trajectory never reached the plate
    DecoherenceBudget decoherence;
    bool witness_ok = false;     // exponent < total phase / 2
    PlateAssessment plate;
    bool phase_ok = false;       // total phase >= phase target
    bool overall = false;

    // Scalars backing the flags.
    double split = 0.0;            // dx, m
    double center_distance = 0.0;  // d, m
    double s_max = 0.0;            // m
    double end_gap = 0.0;          // x0 - s_max, m
    double recapture_gap = 0.0;    // m
    double tau1 = 0.0;             // s
};

struct SweepResult {
    std::string axis;                  // primary axis label
    std::vector<std::string> columns;  // column names, first is the axis
    std::vector<std::vector<double>> rows;
};

namespace designer {

enum class Execution { serial, parallel };

/// Run the whole chain (trajectory, phase, decoherence, witness, plate) and
/// combine the constraint flags. Collisions are reported as an infeasible
/// row, not an exception.
FeasibilityReport feasibility(const ExperimentConfig& config);

/// Smallest mass passing recapture whose step-2 phase reaches phase_target,
/// for a fixed N. Bisection over [1e-18, 1e-12] kg to 0.5% in mass; throws
/// NoSolutionError when the bracket contains no feasible mass.
double min_feasible_mass(double N, double field_gradient, double tau, double t_int,
                         double phase_target, const constants::MaterialPreset& material,
                         double plate_thickness = 1e-6, double time_step = 1e-4);

/// Envelope of min_feasible_mass over a grid of N: the design freedom the
/// figures scan. Returns the best (smallest) mass and the N achieving it.
struct OptimalMass {
    double mass = 0.0;
    double N = 0.0;
};
OptimalMass optimal_min_feasible_mass(double field_gradient, double tau, double t_int,
                                      double phase_target,
                                      const constants::MaterialPreset& material,
                                      double plate_thickness = 1e-6,
                                      double time_step = 1e-4,
                                      const std::vector<double>& N_grid = {});

/// Step-2 phase vs mass for several N (figure-3/4 style data). Rows:
/// N, mass_kg, phase2_rad, feasible, s_max_m, end_gap_m, recapture_gap_m.
/// Infeasible rows (recapture failure or collision) carry feasible = 0 and
/// phase2 of the integrated trajectory when one exists, else NaN.
SweepResult sweep_phase_vs_mass(const std::vector<double>& N_values,
                                const std::vector<double>& masses,
                                const ExperimentConfig& base,
                                Execution exec = Execution::parallel);

/// Accumulated exponent vs number density for several external temperatures
/// (figure-5 style data). Rows: n_V_per_m3, T_ex_K, exponent, limit, pass.
SweepResult sweep_decoherence(const std::vector<double>& densities,
                              const std::vector<double>& temperatures,
                              const ExperimentConfig& base,
                              Execution exec = Execution::parallel);

/// Plate deflection vs placement error (figure-6 style data).
/// Rows: u, deflection_m.
SweepResult sweep_deflection(const std::vector<double>& u_values,
                             const ExperimentConfig& base,
                             Execution exec = Execution::parallel);

} // namespace designer
} // namespace qgem
