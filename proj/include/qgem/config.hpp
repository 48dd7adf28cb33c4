#pragma once

#include <filesystem>
#include <string>

#include "qgem/decoherence.hpp"
#include "qgem/plate.hpp"
#include "qgem/witness.hpp"

// Full parameterization of one experimental design, plus the flat key-value
// config format the CLI reads. Unknown keys are rejected; missing keys fall
// back to the flagship design. Config files may state convenience units only
// through the key names (all values are plain SI numbers).

namespace qgem {

struct ExperimentConfig {
    TestMassSpec mass_spec;
    DriveSpec drive;
    GeometrySpec geometry;
    EnvironmentSpec environment;
    PlateSpec plate;
    double placement_uncertainty = 0.0;  // u, fraction of R in [0, 0.5]
    double phase_target = 0.0;           // rad
    double im_dielectric = 0.0;          // Im((eps-1)/(eps+2)) of the test mass
    witness::DephasingMode dephasing = witness::DephasingMode::joint;
    WitnessOperator witness_op;
    std::string material = "diamond";
    std::string plate_material = "copper";

    void validate() const;
};

namespace config {

/// The flagship screened design: 1e-15 kg diamond, N = 57, 1e4 T/m,
/// tau = 0.5 s, t_int = 1 s, 1 um copper plate, 4 K chamber at 1e6 m^-3.
ExperimentConfig flagship();

/// Parse `key = value` lines ('#' comments). Throws ParseError with the
/// offending line number, or ValidationError naming the offending key.
ExperimentConfig parse_text(const std::string& text);
ExperimentConfig parse_file(const std::filesystem::path& path);

/// Canonical serialization (sorted keys, full precision). Identical configs
/// serialize identically; this is what gets hashed.
std::string canonical_text(const ExperimentConfig& cfg);

/// FNV-1a 64-bit digest of the canonical text, as 16 hex characters.
std::string hash(const ExperimentConfig& cfg);

} // namespace config
} // namespace qgem
