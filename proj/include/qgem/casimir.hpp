#pragma once

#include "qgem/constants.hpp"

// Electromagnetic-vacuum forces of the screened interferometer pair:
// sphere-sphere Casimir-Polder potential and the separation bound it implies,
// sphere-plate Casimir force, the recapture-gap constraint, and the plate's
// Newtonian pull.
//
// Sign convention: potentials are returned with their physical sign
// (attractive, <= 0); forces are returned as magnitudes and always point
// toward the other body (sphere-plate: toward the plate). Gaps "x" are
// measured from the sphere centre to the nearest plate surface.

namespace qgem {

// Spherical test mass. The radius always follows from mass and density.
struct TestMassSpec {
    double mass = 0.0;                 // kg
    double density = 0.0;              // kg/m^3
    double dielectric_constant = 1.0;  // dimensionless, >= 1

    double radius() const;             // (3 m / 4 pi rho)^(1/3), m
    double dielectric_factor() const;  // (eps - 1) / (eps + 2)
    void validate() const;             // throws ValidationError
};

TestMassSpec make_test_mass(double mass, const constants::MaterialPreset& material);

namespace casimir {

/// Casimir-Polder potential between two equal dielectric spheres at
/// centre-to-centre separation r. Always <= 0. Requires r > 2R.
double cp_potential(const TestMassSpec& spec, double r);  // J

/// Smallest sphere-sphere separation at which gravity exceeds the
/// Casimir-Polder potential by a factor of ten. Mass-independent.
/// Requires density > 0 and epsilon > 1.
double min_separation_bound(double density, double epsilon);  // m

/// Magnitude of the Casimir force between a dielectric sphere and a
/// perfectly conducting plate at gap x (sphere centre to plate surface).
double plate_force(const TestMassSpec& spec, double x);  // N

/// Smallest gap at which the Casimir pull stays one order of magnitude
/// below the magnetic acceleration g mu_B dB / m, so the interferometer
/// can still be closed.
double recapture_gap(const TestMassSpec& spec, double field_gradient);  // m

/// Newtonian pull of the plate on a nearby mass, infinite-sheet limit.
double plate_gravity_acceleration(double plate_density, double thickness);  // m/s^2

} // namespace casimir
} // namespace qgem
