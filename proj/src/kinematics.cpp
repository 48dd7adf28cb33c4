#include "qgem/kinematics.hpp"

#include <cmath>
#include <string>

#include "qgem/errors.hpp"

namespace qgem {

using constants::si;

void DriveSpec::validate() const {
    if (!(field_gradient >= 0.0))
        throw ValidationError("DriveSpec: field_gradient must be >= 0");
    if (!(split_time > 0.0)) throw ValidationError("DriveSpec: split_time must be > 0");
    if (!(flight_time >= 0.0)) throw ValidationError("DriveSpec: flight_time must be >= 0");
    if (!(time_step > 0.0)) throw ValidationError("DriveSpec: time_step must be > 0");
    if (time_step > split_time / 100.0 ||
        (flight_time > 0.0 && time_step > flight_time / 100.0))
        throw ValidationError("DriveSpec: time_step must be <= min(tau, t_int)/100");
}

void GeometrySpec::validate() const {
    if (!(separation_multiplier > 1.0))
        throw ValidationError("GeometrySpec: N must be > 1");
    if (!(plate_thickness > 0.0))
        throw ValidationError("GeometrySpec: plate thickness must be > 0");
}

double GeometrySpec::inner_separation(const TestMassSpec& spec) const {
    return separation_multiplier * spec.radius();
}

double GeometrySpec::initial_gap(const TestMassSpec& spec) const {
    const double x0 = 0.5 * inner_separation(spec) - 0.5 * plate_thickness;
    if (!(x0 > 0.0))
        throw GeometryError("GeometrySpec: initial gap N R/2 - W/2 is not positive");
    return x0;
}

double TrajectoryProfile::step2_dt() const {
    const std::size_t n = step2_end - step1_end;
    if (n == 0) return 0.0;
    return (times[step2_end] - times[step1_end]) / static_cast<double>(n);
}

namespace kinematics {

double magnetic_acceleration(const TestMassSpec& spec, double field_gradient) {
    return si().g_factor * si().mu_B * field_gradient / spec.mass;
}

double split_size(const TestMassSpec& spec, const DriveSpec& drive) {
    const double half = 0.5 * drive.split_time;
    return 2.0 * magnetic_acceleration(spec, drive.field_gradient) * half * half;
}

namespace {

double casimir_acceleration(const TestMassSpec& spec, double x0, double s) {
    const double gap = x0 - s;
    if (!(gap > 0.0))
        throw CollisionError("freefall_drift: branch reached the plate surface");
    return casimir::plate_force(spec, gap) / spec.mass;
}

// Separation during a magnetic split of duration T: a t^2 while accelerating,
// mirrored while decelerating; ends at 2 a (T/2)^2.
double split_separation(double a_mag, double T, double t) {
    if (t <= 0.5 * T) return a_mag * t * t;
    const double r = T - t;
    return 2.0 * a_mag * (0.5 * T) * (0.5 * T) - a_mag * r * r;
}

} // namespace

FreeFall freefall_drift(const TestMassSpec& spec, const GeometrySpec& geom,
                        const DriveSpec& drive) {
    spec.validate();
    geom.validate();
    drive.validate();
    const double x0 = geom.initial_gap(spec);

    FreeFall trivial;
    trivial.times.push_back(0.0);
    trivial.s.push_back(0.0);
    trivial.velocity.push_back(0.0);
    if (drive.flight_time == 0.0) return trivial;

    const auto n = static_cast<std::size_t>(
        std::max<long long>(1, std::llround(drive.flight_time / drive.time_step)));
    const double h = drive.flight_time / static_cast<double>(n);

    FreeFall out;
    out.times.reserve(n + 1);
    out.s.reserve(n + 1);
    out.velocity.reserve(n + 1);
    out.times.push_back(0.0);
    out.s.push_back(0.0);
    out.velocity.push_back(0.0);

    double s = 0.0;
    double v = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        // Classical RK4 on (s, v); the force depends on s only.
        const double a1 = casimir_acceleration(spec, x0, s);
        const double s2 = s + 0.5 * h * v;
        const double v2 = v + 0.5 * h * a1;
        const double a2 = casimir_acceleration(spec, x0, s2);
        const double s3 = s + 0.5 * h * v2;
        const double v3 = v + 0.5 * h * a2;
        const double a3 = casimir_acceleration(spec, x0, s3);
        const double s4 = s + h * v3;
        const double v4 = v + h * a3;
        const double a4 = casimir_acceleration(spec, x0, s4);

        s += h / 6.0 * (v + 2.0 * (v2 + v3) + v4);
        v += h / 6.0 * (a1 + 2.0 * (a2 + a3) + a4);
        if (!(x0 - s > 0.0))
            throw CollisionError("freefall_drift: branch reached the plate surface");

        out.times.push_back(static_cast<double>(k + 1) * h);
        out.s.push_back(s);
        out.velocity.push_back(v);
    }
    out.s_max = s;
    return out;
}

double recombine_time(const DriveSpec& drive, double a_mag, double s_max) {
    const double half = 0.5 * drive.split_time;
    if (s_max == 0.0) return drive.split_time;
    if (!(a_mag > 0.0))
        throw ValidationError("recombine_time: a_mag must be > 0 when s_max > 0");
    return 2.0 * std::sqrt(half * half + s_max / a_mag);
}

TrajectoryProfile full_profile(const TestMassSpec& spec, const GeometrySpec& geom,
                               const DriveSpec& drive) {
    spec.validate();
    geom.validate();
    drive.validate();

    const double a_mag = magnetic_acceleration(spec, drive.field_gradient);
    const double dx = split_size(spec, drive);
    const double x0 = geom.initial_gap(spec);
    const double tau = drive.split_time;

    TrajectoryProfile p;
    p.split = dx;

    // Step 1: even sample count so the acceleration/deceleration switch lands
    // on a sample.
    const auto n1 = static_cast<std::size_t>(
        2 * std::max<long long>(1, std::llround(tau / (2.0 * drive.time_step))));
    const double h1 = tau / static_cast<double>(n1);
    for (std::size_t i = 0; i <= n1; ++i) {
        const double t = static_cast<double>(i) * h1;
        p.times.push_back(t);
        p.separation.push_back(split_separation(a_mag, tau, t));
        p.drift.push_back(0.0);
        p.gap.push_back(x0);
    }
    p.step1_end = n1;

    // Step 2: free fall with Casimir drift of the inner branch. In the
    // zero-field limit there is no superposition and no modelled drift.
    if (drive.flight_time == 0.0) {
        // nothing to append
    } else if (a_mag > 0.0) {
        const FreeFall fall = freefall_drift(spec, geom, drive);
        for (std::size_t k = 1; k < fall.times.size(); ++k) {
            p.times.push_back(tau + fall.times[k]);
            p.separation.push_back(dx + fall.s[k]);
            p.drift.push_back(fall.s[k]);
            p.gap.push_back(x0 - fall.s[k]);
        }
        p.s_max = fall.s_max;
    } else {
        const auto n2 = static_cast<std::size_t>(
            std::max<long long>(1, std::llround(drive.flight_time / drive.time_step)));
        const double h2 = drive.flight_time / static_cast<double>(n2);
        for (std::size_t k = 1; k <= n2; ++k) {
            p.times.push_back(tau + static_cast<double>(k) * h2);
            p.separation.push_back(0.0);
            p.drift.push_back(0.0);
            p.gap.push_back(x0);
        }
        p.s_max = 0.0;
    }
    p.step2_end = p.times.size() - 1;

    // Step 3: mirrored step-1 shape with duration tau1. Its notional start
    // separation is 2 a (tau1/2)^2; the residual inward velocity at turnaround
    // is neglected.
    p.tau1 = recombine_time(drive, a_mag, p.s_max);
    const double t2 = tau + drive.flight_time;
    const auto n3 = static_cast<std::size_t>(
        2 * std::max<long long>(1, std::llround(p.tau1 / (2.0 * drive.time_step))));
    const double h3 = p.tau1 / static_cast<double>(n3);
    for (std::size_t i = 1; i <= n3; ++i) {
        const double u = static_cast<double>(i) * h3;
        p.times.push_back(t2 + u);
        p.separation.push_back(split_separation(a_mag, p.tau1, p.tau1 - u));
        p.drift.push_back(0.0);
        p.gap.push_back(x0);
    }
    return p;
}

} // namespace kinematics
} // namespace qgem
