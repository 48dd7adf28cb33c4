#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qgem/designer.hpp"

// File emission: CSV (comma separated, '.' decimal, header row, %.17g full
// precision) and flat JSON records. Sweep CSVs carry a '#'-prefixed header
// block with the full config for reproducibility.

namespace qgem::io {

std::string format_full(double v);  // %.17g

void write_trajectory_csv(const std::filesystem::path& path,
                          const TrajectoryProfile& profile);

void write_sweep_csv(const std::filesystem::path& path, const SweepResult& sweep,
                     const ExperimentConfig& config);

void write_witness_scan_csv(const std::filesystem::path& path,
                            const std::vector<double>& gamma_t,
                            const std::vector<double>& trace_w_rho);

// Budget scan at fixed temperature: columns n_V,exponent,limit,pass.
void write_budget_scan_csv(const std::filesystem::path& path,
                           const std::vector<double>& densities,
                           const std::vector<double>& exponents, double limit);

std::string feasibility_json(const FeasibilityReport& report);
std::string budget_json(const DecoherenceBudget& budget);
std::string phase_json(const PhaseBreakdown& phase);
std::string plate_json(const PlateAssessment& assessment);

void write_text(const std::filesystem::path& path, const std::string& text);

struct RunManifest {
    std::string config_hash;  // 16 hex chars
    std::string tool_version;
    std::string timestamp_utc;
    std::vector<std::string> outputs;
};

RunManifest make_manifest(const ExperimentConfig& config,
                          std::vector<std::string> outputs);
std::string manifest_json(const RunManifest& manifest);

} // namespace qgem::io
