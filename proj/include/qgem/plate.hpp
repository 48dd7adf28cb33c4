#pragma once

#include "qgem/kinematics.hpp"

// Mechanics of the screening plate: deflection under the worst-case Casimir
// imbalance, vibration frequency, ground-state spread, the which-path
// criterion, and the resulting bound on the plate length.
//
// The plate is square (side L, thickness W), clamped at both ends, loaded at
// the centre (worst case). The placement uncertainty of each test mass is
// u R with 0 <= u <= 0.5, both masses offset to the same side.

namespace qgem {

struct PlateSpec {
    double length = 0.0;          // L, m
    double thickness = 0.0;       // W, m
    double density = 0.0;         // rho_p, kg/m^3
    double youngs_modulus = 0.0;  // E, Pa

    double mass() const { return density * length * length * thickness; }
    void validate() const;  // positive fields, L/W > 10
};

struct PlateAssessment {
    double deflection_max = 0.0;  // m
    double frequency = 0.0;       // rad/s
    double ground_spread = 0.0;   // m
    bool which_path_ok = false;   // deflection_max < ground_spread
    double length_bound = 0.0;    // m
};

namespace plate {

/// Centre deflection of the clamped plate under a point load F.
double deflection(double force, const PlateSpec& spec);  // m

/// Worst-case net Casimir force on the plate when both inner masses sit
/// offset by u R toward the same side, evaluated at the minimum gap of the
/// trajectory (end of free fall).
double max_imbalance_force(const TestMassSpec& spec, const GeometrySpec& geom,
                           const TrajectoryProfile& profile, double u);  // N

/// Fundamental oscillation frequency of the loaded plate.
double vibration_frequency(const PlateSpec& spec);  // rad/s

/// Ground-state spread sqrt(hbar / (m_plate omega)); independent of L for a
/// square plate.
double ground_state_spread(const PlateSpec& spec);  // m

/// Largest plate length for which the worst-case deflection stays below the
/// ground-state spread (no which-path record).
double max_length(const PlateSpec& spec_without_length, double max_force);  // m

/// Full assessment at the plate spec's own length.
PlateAssessment assess(const TestMassSpec& spec, const GeometrySpec& geom,
                       const TrajectoryProfile& profile, const PlateSpec& plate_spec,
                       double u);

} // namespace plate
} // namespace qgem
