#include "qgem/phase.hpp"

#include <cmath>
#include <string>

#include "qgem/config.hpp"
#include "qgem/errors.hpp"
#include "qgem/quadrature.hpp"

namespace qgem::phase {

using constants::si;

namespace {

double gravity_scale(double m) { return si().G * m * m / si().hbar; }

// Separation during a magnetic split of duration T (same shape as the
// trajectory module's step 1).
double split_separation(double a_mag, double T, double t) {
    if (t <= 0.5 * T) return a_mag * t * t;
    const double r = T - t;
    return 2.0 * a_mag * (0.5 * T) * (0.5 * T) - a_mag * r * r;
}

} // namespace

PairPhases pairwise_phases(double m, double d, double dx, double t) {
    if (!(dx >= 0.0) || !(d > dx))
        throw GeometryError("pairwise_phases: requires d > dx >= 0");
    if (!(t >= 0.0)) throw GeometryError("pairwise_phases: requires t >= 0");
    const double k = gravity_scale(m) * t;
    PairPhases out;
    out.phi = k / d;
    out.dphi_ud = k / (d + dx) - out.phi;
    out.dphi_du = k / (d - dx) - out.phi;
    return out;
}

double effective_phase_static(double m, double d, double dx, double t) {
    const PairPhases p = pairwise_phases(m, d, dx, t);
    return p.dphi_ud + p.dphi_du;
}

double max_phase_original(double m, double dx, double A, double t) {
    if (!(A > 0.0) || !(dx >= 0.0))
        throw GeometryError("max_phase_original: requires A > 0 and dx >= 0");
    return gravity_scale(m) * t *
           (1.0 / A + 1.0 / (2.0 * dx + A) - 2.0 / (dx + A));
}

double min_mass_for_phase(double phi_target, double A, double field_gradient,
                          double tau, double t_int) {
    if (!(phi_target > 0.0) || !(A > 0.0) || !(field_gradient > 0.0) ||
        !(tau > 0.0) || !(t_int > 0.0))
        throw ValidationError("min_mass_for_phase: all inputs must be > 0");
    const double half = 0.5 * tau;
    const double C = 2.0 * si().g_factor * si().mu_B * field_gradient * half * half;
    const double D = si().G * t_int / si().hbar;

    // Root of (phi A^3 - 2 D C^2) m^2 + 3 phi A^2 C m + 2 phi A C^2 = 0,
    // the mass at which the closest-approach phase reaches phi_target.
    const double denom = 2.0 * (phi_target * A * A * A - 2.0 * D * C * C);
    const double disc = phi_target * A * (phi_target * A * A * A + 16.0 * D * C * C);
    const double num = -3.0 * phi_target * A * A * C - C * std::sqrt(disc);
    const double m = num / denom;
    if (!std::isfinite(m) || !(m > 0.0))
        throw NoSolutionError("min_mass_for_phase: no positive mass reaches the target phase");
    return m;
}

double small_split_limit(double field_gradient, double tau, double t_int, double A) {
    if (!(A > 0.0)) throw GeometryError("small_split_limit: requires A > 0");
    const double drive = si().g_factor * si().mu_B * field_gradient * tau * tau / 2.0;
    return 2.0 * si().G * t_int / (si().hbar * A * A * A) * drive * drive;
}

StagePhases step2_pairwise(const TestMassSpec& spec, const GeometrySpec& geom,
                           const TrajectoryProfile& profile) {
    const double NR = geom.inner_separation(spec);
    const double dx = profile.split;
    const double h = profile.step2_dt();
    const double k = gravity_scale(spec.mass);

    // Trapezoidal accumulation of the three dynamic pair distances:
    // inner-inner N R - 2 s, outer-outer 2 dx + N R, mixed dx + N R - s.
    StagePhases acc;
    const std::size_t first = profile.step2_begin();
    const std::size_t last = profile.step2_end;
    for (std::size_t i = first; i <= last; ++i) {
        const double s = profile.drift[i];
        const double inner = NR - 2.0 * s;
        if (!(inner > 0.0))
            throw CollisionError("step2_phase: inner branches met (N R - 2 s <= 0)");
        const double mixed = dx + NR - s;
        const double w = (i == first || i == last) ? 0.5 : 1.0;
        acc.common += w * (1.0 / mixed);
        acc.dphi_du += w * (1.0 / inner - 1.0 / mixed);
        acc.dphi_ud += w * (1.0 / (2.0 * dx + NR) - 1.0 / mixed);
    }
    acc.common *= k * h;
    acc.dphi_du *= k * h;
    acc.dphi_ud *= k * h;
    return acc;
}

double step2_phase(const TestMassSpec& spec, const GeometrySpec& geom,
                   const TrajectoryProfile& profile) {
    return step2_pairwise(spec, geom, profile).sum();
}

StagePhases step1_pairwise(double m, double d, double a_mag, double tau) {
    StagePhases out;
    if (a_mag == 0.0) return out;
    if (!(a_mag > 0.0) || !(d > 0.0) || !(tau > 0.0))
        throw GeometryError("step1_phase: requires d, tau > 0 and a_mag >= 0");

    const double half = 0.5 * tau;
    const double at2 = a_mag * half;          // a tau / 2
    const double sad = std::sqrt(a_mag * d);  // sqrt(a d)
    const double d1 = d - a_mag * half * half;
    const double d2 = d + a_mag * half * half;
    const double disc1 = 4.0 * d1 * a_mag - (a_mag * tau) * (a_mag * tau);
    const double disc2 = (a_mag * tau) * (a_mag * tau) + 4.0 * a_mag * d2;

    // Printed validity conditions; equivalent to d > dx (no pair collision
    // and no vanishing log argument).
    if (!(disc1 > 0.0) || !(sad > at2))
        throw GeometryError("step1_phase: closed form invalid (4 d1 a <= (a tau)^2); "
                            "use step1_phase_quadrature");

    const double k = gravity_scale(m);
    // Acceleration half: integrals of 1/(d -+ a t^2).
    const double shrink_acc = std::log((sad + at2) / (sad - at2)) / (2.0 * sad);
    const double grow_acc = std::atan(at2 / sad) / sad;
    // Deceleration half.
    const double r1 = std::sqrt(disc1);
    const double shrink_dec = 2.0 * std::atan(a_mag * tau / r1) / r1;
    const double r2 = std::sqrt(disc2);
    const double grow_dec = -std::log((-a_mag * tau + r2) / (a_mag * tau + r2)) / r2;

    out.common = k * tau / d;
    out.dphi_du = k * (shrink_acc + shrink_dec) - out.common;
    out.dphi_ud = k * (grow_acc + grow_dec) - out.common;
    return out;
}

double step1_phase(double m, double d, double a_mag, double tau) {
    return step1_pairwise(m, d, a_mag, tau).sum();
}

StagePhases step1_pairwise_quadrature(double m, double d, double a_mag, double tau) {
    StagePhases out;
    if (a_mag == 0.0) return out;
    const double k = gravity_scale(m);
    const double dxm = 2.0 * a_mag * (0.5 * tau) * (0.5 * tau);
    if (!(d > dxm))
        throw GeometryError("step1_phase_quadrature: pair distance closes (d <= dx)");

    // Pair deltas in cancellation-free form:
    // 1/(d-s) - 1/d = s/(d(d-s)),  1/(d+s) - 1/d = -s/(d(d+s)).
    const auto shrink = [&](double t) {
        const double s = split_separation(a_mag, tau, t);
        return s / (d * (d - s));
    };
    const auto grow = [&](double t) {
        const double s = split_separation(a_mag, tau, t);
        return -s / (d * (d + s));
    };
    // Integrands have a kink at tau/2; integrate the halves separately.
    const double tol = 1e-13 * tau * dxm / (d * d);
    const double half = 0.5 * tau;
    const double i_shrink = quadrature::adaptive_simpson(shrink, 0.0, half, tol) +
                            quadrature::adaptive_simpson(shrink, half, tau, tol);
    const double i_grow = quadrature::adaptive_simpson(grow, 0.0, half, tol) +
                          quadrature::adaptive_simpson(grow, half, tau, tol);

    out.common = k * tau / d;
    out.dphi_du = k * i_shrink;
    out.dphi_ud = k * i_grow;
    return out;
}

double step1_phase_quadrature(double m, double d, double a_mag, double tau) {
    return step1_pairwise_quadrature(m, d, a_mag, tau).sum();
}

double step3_phase(double m, double d, double s_max, double a_mag, double tau1) {
    return step1_phase(m, d - s_max, a_mag, tau1);
}

PhaseBreakdown total_phase(const TestMassSpec& spec, const GeometrySpec& geom,
                           const DriveSpec& drive, const TrajectoryProfile& profile) {
    const double a_mag = kinematics::magnetic_acceleration(spec, drive.field_gradient);
    const double d = profile.split + geom.inner_separation(spec);

    const auto stage_or_fallback = [&](double dd, double tt) {
        try {
            return step1_pairwise(spec.mass, dd, a_mag, tt);
        } catch (const GeometryError&) {
            return step1_pairwise_quadrature(spec.mass, dd, a_mag, tt);
        }
    };

    const StagePhases s1 = stage_or_fallback(d, drive.split_time);
    const StagePhases s2 = step2_pairwise(spec, geom, profile);
    const StagePhases s3 = stage_or_fallback(d - profile.s_max, profile.tau1);

    PhaseBreakdown out;
    out.step1 = s1.sum();
    out.step2 = s2.sum();
    out.step3 = s3.sum();
    out.total = out.step1 + out.step2 + out.step3;
    out.phi_common = s1.common + s2.common + s3.common;
    out.dphi_ud = s1.dphi_ud + s2.dphi_ud + s3.dphi_ud;
    out.dphi_du = s1.dphi_du + s2.dphi_du + s3.dphi_du;
    return out;
}

PhaseBreakdown total_phase(const ExperimentConfig& config) {
    const TrajectoryProfile profile =
        kinematics::full_profile(config.mass_spec, config.geometry, config.drive);
    return total_phase(config.mass_spec, config.geometry, config.drive, profile);
}

} // namespace qgem::phase
