#pragma once

#include <string_view>

// SI units throughout the project. Every physical constant and material
// number is defined here, once; all other modules reference this header.

namespace qgem::constants {

struct PhysicalConstants {
    double hbar = 1.054571817e-34;   // reduced Planck constant, J s
    double c = 299792458.0;          // speed of light, m/s
    double G = 6.67430e-11;          // gravitational constant, m^3/(kg s^2)
    double k_b = 1.380649e-23;       // Boltzmann constant, J/K
    double mu_B = 9.2740100783e-24;  // Bohr magneton, J/T
    double g_factor = 2.0;           // electron g-factor, exact here
    double m_air = 4.8e-26;          // mean air-molecule mass (~29 u), kg
};

// Shared immutable instance used by all modules.
const PhysicalConstants& si();

// 8! * zeta(9), prefactor of the blackbody-scattering constant.
inline constexpr double eight_factorial_zeta9 = 40320.0 * 1.0020083928260822;

struct MaterialPreset {
    std::string_view name;
    double density = 0.0;              // kg/m^3
    double dielectric_constant = 0.0;  // test-mass dielectrics; 0 if n/a
    double youngs_modulus = 0.0;       // plate materials, Pa; 0 if n/a
};

/// Look up a built-in material preset.
///
/// Known names: "diamond" (test-mass dielectric, rho = 3500 kg/m^3,
/// eps = 5.7) and "copper" (plate material, rho = 8960 kg/m^3,
/// E = 1.37e11 Pa). Throws std::invalid_argument for anything else.
const MaterialPreset& preset(std::string_view name);

} // namespace qgem::constants
