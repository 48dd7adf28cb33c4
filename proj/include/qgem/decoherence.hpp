#pragma once

#include <string>

#include "qgem/kinematics.hpp"

// Collisional and blackbody decoherence of one superposition: scattering-rate
// constants, the stage-resolved accumulated exponent, and vacuum-pressure
// conversion. Air molecules are treated in the short-wavelength limit (rate
// Gamma_air, independent of the superposition size); blackbody photons in the
// long-wavelength limit (constants Lambda_i weighting the squared separation).

namespace qgem {

struct EnvironmentSpec {
    double number_density = 0.0;        // n_V, m^-3
    double external_temperature = 0.0;  // T_ex, K
    double internal_temperature = 0.0;  // T_i, K
    double air_molecule_mass = constants::PhysicalConstants{}.m_air;  // kg

    void validate() const;
};

struct DecoherenceBudget {
    double gamma_air = 0.0;   // 1/s
    double lambda_air = 0.0;  // 1/(m^2 s)
    double lambda_sc = 0.0;   // 1/(m^2 s)
    double lambda_e = 0.0;    // 1/(m^2 s)
    double lambda_a = 0.0;    // 1/(m^2 s)
    double exponent = 0.0;    // accumulated sum gamma_k dt, dimensionless

    // Per-channel contributions to the exponent.
    double air_contribution = 0.0;
    double sc_contribution = 0.0;
    double e_contribution = 0.0;
    double a_contribution = 0.0;
    std::string dominant_channel;

    // Blackbody wavelength exceeds ten times the largest separation.
    bool long_wavelength_ok = false;
};

namespace decoherence {

struct PhotonConstants {
    double lambda_sc = 0.0;  // scattered blackbody photons
    double lambda_e = 0.0;   // photons emitted by the test mass (T_i)
    double lambda_a = 0.0;   // absorbed photons (T_ex)
};

/// Long-wavelength scattering constant of the ambient gas.
double lambda_air(const EnvironmentSpec& env, const TestMassSpec& spec);

/// Short-wavelength scattering rate of the ambient gas. Equals
/// lambda_air times the squared thermal de Broglie wavelength.
double gamma_air(const EnvironmentSpec& env, const TestMassSpec& spec);

/// Blackbody scattering, emission, and absorption constants.
/// im_dielectric_factor is Im((eps-1)/(eps+2)) of the test mass.
PhotonConstants photon_constants(const EnvironmentSpec& env, const TestMassSpec& spec,
                                 double im_dielectric_factor);

/// Accumulated decoherence exponent over the full three-step profile for a
/// unit long-wavelength constant, i.e. the integral of the squared
/// superposition size (m^2 s), evaluated in closed form per stage. The same
/// quantity is recomputed by direct trapezoidal summation over the profile;
/// a mismatch beyond 1e-3 throws ValidationError (inconsistent profile/drive).
double separation_square_integral(const TestMassSpec& spec, const DriveSpec& drive,
                                  const TrajectoryProfile& profile);

/// Total exponent: gamma_air (t_int + tau + tau1) + sum_i Lambda_i * integral.
double accumulated_exponent(double gamma_air_rate, double lambda_total,
                            const TestMassSpec& spec, const DriveSpec& drive,
                            const TrajectoryProfile& profile);

/// Full budget for one environment / drive / trajectory.
DecoherenceBudget budget(const EnvironmentSpec& env, const TestMassSpec& spec,
                         const DriveSpec& drive, const TrajectoryProfile& profile,
                         double im_dielectric_factor);

/// Ideal-gas pressure of the residual vacuum.
double pressure(const EnvironmentSpec& env);  // Pa

/// Number density at which the accumulated exponent reaches budget_limit,
/// by bisection (the exponent is monotone in n_V). Throws NoSolutionError
/// when the photon channels alone already exceed the limit or the bracket
/// fails.
double threshold_density(const EnvironmentSpec& env, const TestMassSpec& spec,
                         const DriveSpec& drive, const TrajectoryProfile& profile,
                         double im_dielectric_factor, double budget_limit);

} // namespace decoherence
} // namespace qgem
