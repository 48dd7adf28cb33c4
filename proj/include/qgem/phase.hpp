#pragma once

#include "qgem/kinematics.hpp"

// Gravitational entangling phases. Original-setup closed forms, the screened
// setup's dynamic step-2 accumulation, and the split/recombination closed
// forms, assembled into a per-step breakdown.
//
// Pair naming follows the spin labels: dphi_ud is the phase delta of the
// up-down branch pair (the outermost one, distance growing with the split),
// dphi_du that of the down-up pair (innermost, distance shrinking). The
// common phase phi references the up-up / down-down distance.

namespace qgem {

struct PhaseBreakdown {
    double phi_common = 0.0;  // rad
    double dphi_ud = 0.0;     // rad, <= 0 for attractive gravity
    double dphi_du = 0.0;     // rad, >= 0
    double step1 = 0.0;       // rad
    double step2 = 0.0;       // rad
    double step3 = 0.0;       // rad
    double total = 0.0;       // rad, = step1 + step2 + step3 = dphi_ud + dphi_du
};

struct ExperimentConfig;

namespace phase {

struct PairPhases {
    double phi = 0.0;      // common phase
    double dphi_ud = 0.0;  // up-down pair delta
    double dphi_du = 0.0;  // down-up pair delta
};

// Pairwise contributions of one interferometer stage.
struct StagePhases {
    double common = 0.0;
    double dphi_ud = 0.0;
    double dphi_du = 0.0;
    double sum() const { return dphi_ud + dphi_du; }
};

/// Static-geometry phases of the original two-sphere setup over time t.
/// Requires d > dx >= 0.
PairPhases pairwise_phases(double m, double d, double dx, double t);

/// Effective entangling phase of the static setup; equals
/// dphi_ud + dphi_du exactly.
double effective_phase_static(double m, double d, double dx, double t);

/// Static phase expressed at the closest-approach distance A = d - dx.
double max_phase_original(double m, double dx, double A, double t);

/// Smallest mass that reaches phi_target in the original setup, closed form.
/// Throws NoSolutionError when the root is nonpositive or not finite.
double min_mass_for_phase(double phi_target, double A, double field_gradient,
                          double tau, double t_int);

/// Mass-independent small-split limit of the static phase (valid for dx << A).
double small_split_limit(double field_gradient, double tau, double t_int, double A);

/// Step-2 phase accumulated over the free-fall profile (trapezoidal sum of
/// the dynamic three-distance bracket). Throws CollisionError if the
/// inner-inner distance N R - 2 s closes.
double step2_phase(const TestMassSpec& spec, const GeometrySpec& geom,
                   const TrajectoryProfile& profile);
StagePhases step2_pairwise(const TestMassSpec& spec, const GeometrySpec& geom,
                           const TrajectoryProfile& profile);

/// Closed-form phase of the magnetic split (acceleration + deceleration
/// halves). Throws GeometryError when the printed validity conditions fail;
/// callers then fall back to step1_phase_quadrature.
double step1_phase(double m, double d, double a_mag, double tau);
StagePhases step1_pairwise(double m, double d, double a_mag, double tau);

/// Numeric-quadrature route for the same integrals (production fallback and
/// test reference).
double step1_phase_quadrature(double m, double d, double a_mag, double tau);
StagePhases step1_pairwise_quadrature(double m, double d, double a_mag, double tau);

/// Step-3 phase: the step-1 forms evaluated at (d - s_max, tau1).
double step3_phase(double m, double d, double s_max, double a_mag, double tau1);

/// Full breakdown for one experiment configuration (runs the trajectory).
PhaseBreakdown total_phase(const ExperimentConfig& config);

/// Breakdown from an already-integrated profile.
PhaseBreakdown total_phase(const TestMassSpec& spec, const GeometrySpec& geom,
                           const DriveSpec& drive, const TrajectoryProfile& profile);

} // namespace phase
} // namespace qgem
