#pragma once

#include <cstddef>
#include <vector>

#include "qgem/casimir.hpp"

// Branch trajectories through the three interferometer steps: magnetic
// split/recombine profiles (closed form), free-fall drift of the inner
// branches toward the plate (fixed-step RK4), and the recombination time.
//
// Step layout of a full profile:
//   step 1: [0, tau]                magnetic split, separation 0 -> dx
//   step 2: (tau, tau + t_int]      free fall, separation dx + s(t)
//   step 3: (.., tau + t_int + tau1] recombination, mirrored step-1 shape
//
// The drift s(t) is the extra inward displacement of the plate-adjacent
// branch; the outer branches are held fixed (their Casimir displacement is
// negligible against dx). The gap column is x0 - s(t) with x0 = N R/2 - W/2.

namespace qgem {

struct DriveSpec {
    double field_gradient = 0.0;  // dB/dx, T/m (zero-field limit allowed)
    double split_time = 0.0;      // tau, s
    double flight_time = 0.0;     // t_int, s
    double time_step = 1e-4;      // integrator / sampling step, s

    // Requires positive times and time_step <= min(tau, t_int)/100.
    void validate() const;
};

struct GeometrySpec {
    double separation_multiplier = 0.0;  // N, inner-inner separation in radii
    double plate_thickness = 0.0;        // W, m

    void validate() const;
    double inner_separation(const TestMassSpec& spec) const;  // A = N R, m
    double initial_gap(const TestMassSpec& spec) const;       // x0 = N R/2 - W/2, m
};

struct TrajectoryProfile {
    std::vector<double> times;       // s, strictly increasing from 0
    std::vector<double> separation;  // |x_up - x_down| within one interferometer, m
    std::vector<double> drift;       // s(t): nonzero only during step 2, m
    std::vector<double> gap;         // x0 - s(t), m
    std::size_t step1_end = 0;       // index of the last step-1 sample
    std::size_t step2_end = 0;       // index of the last step-2 sample
    double split = 0.0;              // dx, m
    double s_max = 0.0;              // drift at the end of free fall, m
    double tau1 = 0.0;               // recombination time, s

    std::size_t step2_begin() const { return step1_end; }
    // Uniform sample spacing inside step 2.
    double step2_dt() const;
};

// Step-2 fragment produced by the drift integrator.
struct FreeFall {
    std::vector<double> times;     // offsets from the start of free fall, s
    std::vector<double> s;         // inward drift, m
    std::vector<double> velocity;  // ds/dt, m/s
    double s_max = 0.0;
};

namespace kinematics {

/// Branch acceleration g mu_B dB / m imparted by the field gradient.
double magnetic_acceleration(const TestMassSpec& spec, double field_gradient);  // m/s^2

/// Superposition size reached at the end of step 1: dx = 2 a_mag (tau/2)^2.
double split_size(const TestMassSpec& spec, const DriveSpec& drive);  // m

/// Integrates s'' = F_ca(x0 - s)/m over the free fall with s(0) = s'(0) = 0,
/// classical RK4 at the drive's fixed step. Throws CollisionError if the gap
/// closes.
FreeFall freefall_drift(const TestMassSpec& spec, const GeometrySpec& geom,
                        const DriveSpec& drive);

/// Time needed to close the enlarged superposition:
/// tau1 = 2 sqrt((tau/2)^2 + s_max/a_mag).
double recombine_time(const DriveSpec& drive, double a_mag, double s_max);  // s

/// Full three-step profile; see the header comment for the step layout.
TrajectoryProfile full_profile(const TestMassSpec& spec, const GeometrySpec& geom,
                               const DriveSpec& drive);

} // namespace kinematics
} // namespace qgem
