#include "qgem/plate.hpp"

#include <cmath>
#include <limits>

#include "qgem/casimir.hpp"
#include "qgem/errors.hpp"

namespace qgem {

using constants::si;

void PlateSpec::validate() const {
    if (!(length > 0.0) || !(thickness > 0.0) || !(density > 0.0) ||
        !(youngs_modulus > 0.0))
        throw ValidationError("PlateSpec: all fields must be > 0");
    if (!(length / thickness > 10.0))
        throw ValidationError("PlateSpec: thin-plate model requires L/W > 10");
}

namespace plate {

double deflection(double force, const PlateSpec& spec) {
    if (!(force >= 0.0)) throw ValidationError("deflection: force must be >= 0");
    const double w3 = spec.thickness * spec.thickness * spec.thickness;
    return force * spec.length * spec.length / (16.0 * spec.youngs_modulus * w3);
}

double max_imbalance_force(const TestMassSpec& spec, const GeometrySpec& geom,
                           const TrajectoryProfile& profile, double u) {
    if (!(u >= 0.0) || !(u <= 0.5))
        throw ValidationError("max_imbalance_force: u must be in [0, 0.5]");
    geom.validate();
    const double x_min = geom.initial_gap(spec) - profile.s_max;
    const double offset = u * spec.radius();
    if (!(x_min - offset > 0.0))
        throw GeometryError("max_imbalance_force: offset mass touches the plate");
    if (u == 0.0) return 0.0;
    return casimir::plate_force(spec, x_min - offset) -
           casimir::plate_force(spec, x_min + offset);
}

double vibration_frequency(const PlateSpec& spec) {
    const double l2 = spec.length * spec.length;
    return std::sqrt(16.0 * spec.youngs_modulus * spec.thickness * spec.thickness /
                     (spec.density * l2 * l2));
}

double ground_state_spread(const PlateSpec& spec) {
    return std::sqrt(si().hbar / (spec.mass() * vibration_frequency(spec)));
}

double max_length(const PlateSpec& spec_without_length, double max_force) {
    if (!(max_force > 0.0)) throw ValidationError("max_length: force must be > 0");
    // Solve deflection(L) = ground-state spread; the spread is L-independent
    // for a square plate, so L^2 = 16 E W^3 dS / F.
    PlateSpec probe = spec_without_length;
    probe.length = 1.0;  // any value; the spread does not depend on it
    const double spread = ground_state_spread(probe);
    const double w3 = spec_without_length.thickness * spec_without_length.thickness *
                      spec_without_length.thickness;
    return std::sqrt(16.0 * spec_without_length.youngs_modulus * w3 * spread / max_force);
}

PlateAssessment assess(const TestMassSpec& spec, const GeometrySpec& geom,
                       const TrajectoryProfile& profile, const PlateSpec& plate_spec,
                       double u) {
    plate_spec.validate();
    PlateAssessment out;
    const double force = max_imbalance_force(spec, geom, profile, u);
    out.deflection_max = deflection(force, plate_spec);
    out.frequency = vibration_frequency(plate_spec);
    out.ground_spread = ground_state_spread(plate_spec);
    out.which_path_ok = out.deflection_max < out.ground_spread;
    out.length_bound = force > 0.0 ? max_length(plate_spec, force)
                                   : std::numeric_limits<double>::infinity();
    return out;
}

} // namespace plate
} // namespace qgem
