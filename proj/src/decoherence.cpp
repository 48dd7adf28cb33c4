#include "qgem/decoherence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qgem/errors.hpp"

namespace qgem {

using constants::si;
using std::numbers::pi;

void EnvironmentSpec::validate() const {
    if (!(number_density >= 0.0))
        throw ValidationError("EnvironmentSpec: number_density must be >= 0");
    if (!(external_temperature > 0.0))
        throw ValidationError("EnvironmentSpec: external_temperature must be > 0");
    if (!(internal_temperature > 0.0))
        throw ValidationError("EnvironmentSpec: internal_temperature must be > 0");
    if (!(air_molecule_mass > 0.0))
        throw ValidationError("EnvironmentSpec: air_molecule_mass must be > 0");
}

namespace decoherence {

double lambda_air(const EnvironmentSpec& env, const TestMassSpec& spec) {
    const double R = spec.radius();
    const double thermal = std::pow(2.0 * si().k_b * env.external_temperature, 1.5);
    return 4.0 * R * R / (3.0 * si().hbar * si().hbar) * env.number_density *
           std::sqrt(pi * env.air_molecule_mass) * thermal;
}

double gamma_air(const EnvironmentSpec& env, const TestMassSpec& spec) {
    const double R = spec.radius();
    return 16.0 * pi * env.number_density * R * R / 3.0 *
           std::sqrt(2.0 * pi * si().k_b * env.external_temperature / env.air_molecule_mass);
}

PhotonConstants photon_constants(const EnvironmentSpec& env, const TestMassSpec& spec,
                                 double im_dielectric_factor) {
    const double R = spec.radius();
    const double re = spec.dielectric_factor();
    const double kb_over_hc = si().k_b / (si().hbar * si().c);

    PhotonConstants out;
    out.lambda_sc = constants::eight_factorial_zeta9 *
                    (8.0 * si().c * std::pow(R, 6) / (9.0 * pi)) *
                    std::pow(kb_over_hc * env.external_temperature, 9) * re * re;
    const double emit_abs = 16.0 * std::pow(pi, 5) * si().c * R * R * R / 189.0;
    out.lambda_e = emit_abs * std::pow(kb_over_hc * env.internal_temperature, 6) *
                   im_dielectric_factor;
    out.lambda_a = emit_abs * std::pow(kb_over_hc * env.external_temperature, 6) *
                   im_dielectric_factor;
    return out;
}

namespace {

// Direct trapezoidal sum of separation^2 over the stored profile samples.
double profile_square_sum(const TrajectoryProfile& p) {
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < p.times.size(); ++i) {
        const double h = p.times[i + 1] - p.times[i];
        const double a = p.separation[i];
        const double b = p.separation[i + 1];
        acc += 0.5 * h * (a * a + b * b);
    }
    return acc;
}

} // namespace

double separation_square_integral(const TestMassSpec& spec, const DriveSpec& drive,
                                  const TrajectoryProfile& profile) {
    const double a_mag = kinematics::magnetic_acceleration(spec, drive.field_gradient);
    if (a_mag == 0.0) return 0.0;

    const double tau_half = 0.5 * drive.split_time;
    const double tau1_half = 0.5 * profile.tau1;

    // Split and recombination stages integrate to (46/15) a^2 (T/2)^5 each;
    // the free fall contributes dx^2 t_int plus the drift cross terms.
    double closed = 46.0 / 15.0 * a_mag * a_mag *
                    (std::pow(tau_half, 5) + std::pow(tau1_half, 5));
    closed += 4.0 * a_mag * a_mag * std::pow(tau_half, 4) * drive.flight_time;

    const double h = profile.step2_dt();
    const std::size_t first = profile.step2_begin();
    const std::size_t last = profile.step2_end;
    double drift_sum = 0.0;
    for (std::size_t i = first; i <= last; ++i) {
        const double s = profile.drift[i];
        const double w = (i == first || i == last) ? 0.5 : 1.0;
        drift_sum += w * (4.0 * a_mag * tau_half * tau_half * s + s * s);
    }
    closed += drift_sum * h;

    const double direct = profile_square_sum(profile);
    if (std::abs(direct - closed) > 1e-3 * std::max(std::abs(closed), 1e-300))
        throw ValidationError("separation_square_integral: profile disagrees with the "
                              "stage-wise closed form; profile and drive are inconsistent");
    return closed;
}

double accumulated_exponent(double gamma_air_rate, double lambda_total,
                            const TestMassSpec& spec, const DriveSpec& drive,
                            const TrajectoryProfile& profile) {
    const double runtime = drive.flight_time + drive.split_time + profile.tau1;
    return gamma_air_rate * runtime +
           lambda_total * separation_square_integral(spec, drive, profile);
}

DecoherenceBudget budget(const EnvironmentSpec& env, const TestMassSpec& spec,
                         const DriveSpec& drive, const TrajectoryProfile& profile,
                         double im_dielectric_factor) {
    env.validate();
    DecoherenceBudget out;
    out.gamma_air = gamma_air(env, spec);
    out.lambda_air = lambda_air(env, spec);
    const PhotonConstants ph = photon_constants(env, spec, im_dielectric_factor);
    out.lambda_sc = ph.lambda_sc;
    out.lambda_e = ph.lambda_e;
    out.lambda_a = ph.lambda_a;

    const double runtime = drive.flight_time + drive.split_time + profile.tau1;
    const double sq = separation_square_integral(spec, drive, profile);
    out.air_contribution = out.gamma_air * runtime;
    out.sc_contribution = ph.lambda_sc * sq;
    out.e_contribution = ph.lambda_e * sq;
    out.a_contribution = ph.lambda_a * sq;
    out.exponent = out.air_contribution + out.sc_contribution + out.e_contribution +
                   out.a_contribution;

    const struct { const char* name; double value; } channels[] = {
        {"air", out.air_contribution},
        {"photon-scattering", out.sc_contribution},
        {"photon-emission", out.e_contribution},
        {"photon-absorption", out.a_contribution},
    };
    out.dominant_channel =
        std::max_element(std::begin(channels), std::end(channels),
                         [](const auto& a, const auto& b) { return a.value < b.value; })
            ->name;

    const double bb_wavelength = si().hbar * si().c / (si().k_b * env.external_temperature);
    out.long_wavelength_ok = bb_wavelength > 10.0 * (profile.split + profile.s_max);
    return out;
}

double pressure(const EnvironmentSpec& env) {
    return env.number_density * si().k_b * env.external_temperature;
}

double threshold_density(const EnvironmentSpec& env, const TestMassSpec& spec,
                         const DriveSpec& drive, const TrajectoryProfile& profile,
                         double im_dielectric_factor, double budget_limit) {
    if (!(budget_limit > 0.0))
        throw ValidationError("threshold_density: budget_limit must be > 0");

    const auto exponent_at = [&](double n_V) {
        EnvironmentSpec e = env;
        e.number_density = n_V;
        return budget(e, spec, drive, profile, im_dielectric_factor).exponent;
    };

    double lo = 0.0;
    if (exponent_at(lo) >= budget_limit)
        throw NoSolutionError("threshold_density: photon channels alone exceed the budget");
    double hi = 1.0;
    while (exponent_at(hi) < budget_limit) {
        hi *= 10.0;
        if (hi > 1e40)
            throw NoSolutionError("threshold_density: no crossing below 1e40 m^-3");
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (exponent_at(mid) < budget_limit)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-12 * hi) break;
    }
    return 0.5 * (lo + hi);
}

} // namespace decoherence
} // namespace qgem
