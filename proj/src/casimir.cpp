#include "qgem/casimir.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qgem/errors.hpp"

namespace qgem {

using constants::si;
using std::numbers::pi;

double TestMassSpec::radius() const {
    return std::cbrt(3.0 * mass / (4.0 * pi * density));
}

double TestMassSpec::dielectric_factor() const {
    return (dielectric_constant - 1.0) / (dielectric_constant + 2.0);
}

void TestMassSpec::validate() const {
    if (!(mass > 0.0)) throw ValidationError("TestMassSpec: mass must be > 0");
    if (!(density > 0.0)) throw ValidationError("TestMassSpec: density must be > 0");
    if (!(dielectric_constant >= 1.0))
        throw ValidationError("TestMassSpec: dielectric_constant must be >= 1");
}

TestMassSpec make_test_mass(double mass, const constants::MaterialPreset& material) {
    TestMassSpec spec{mass, material.density, material.dielectric_constant};
    spec.validate();
    return spec;
}

namespace casimir {

double cp_potential(const TestMassSpec& spec, double r) {
    const double R = spec.radius();
    if (!(r > 2.0 * R))
        throw GeometryError("cp_potential: spheres overlap (r <= 2R)");
    const double f = spec.dielectric_factor();
    return -(23.0 * si().hbar * si().c / (4.0 * pi)) * std::pow(R, 6) / std::pow(r, 7) * f * f;
}

double min_separation_bound(double density, double epsilon) {
    if (!(density > 0.0))
        throw GeometryError("min_separation_bound: density must be > 0");
    if (!(epsilon > 1.0))
        throw GeometryError("min_separation_bound: epsilon must be > 1");
    const double f = (epsilon - 1.0) / (epsilon + 2.0);
    const double geom = 3.0 / (4.0 * pi * density) * f;
    const double a6 = 10.0 * (23.0 * si().hbar * si().c / (4.0 * pi * si().G)) * geom * geom;
    return std::pow(a6, 1.0 / 6.0);
}

double plate_force(const TestMassSpec& spec, double x) {
    if (!(x > 0.0)) throw GeometryError("plate_force: gap must be > 0");
    const double R = spec.radius();
    return (3.0 * si().hbar * si().c / (2.0 * pi)) * spec.dielectric_factor() *
           R * R * R / std::pow(x, 5);
}

double recapture_gap(const TestMassSpec& spec, double field_gradient) {
    if (!(field_gradient > 0.0))
        throw GeometryError("recapture_gap: field gradient must be > 0");
    const double num = 90.0 * si().hbar * si().c * spec.dielectric_factor() * spec.mass;
    const double den = 8.0 * spec.density * pi * pi * si().g_factor * si().mu_B * field_gradient;
    return std::pow(num / den, 0.2);
}

double plate_gravity_acceleration(double plate_density, double thickness) {
    return 2.0 * pi * si().G * plate_density * thickness;
}

} // namespace casimir
} // namespace qgem
