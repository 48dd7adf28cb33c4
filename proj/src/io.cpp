#include "qgem/io.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qgem/errors.hpp"

namespace qgem::io {

namespace {

constexpr const char* tool_version = "1.0.0";

std::ofstream open_out(const std::filesystem::path& path) {
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open output file: " + path.string());
    return out;
}

} // namespace

std::string format_full(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_trajectory_csv(const std::filesystem::path& path,
                          const TrajectoryProfile& profile) {
    std::ofstream out = open_out(path);
    out << "t,separation,s,gap\n";
    for (std::size_t i = 0; i < profile.times.size(); ++i) {
        out << format_full(profile.times[i]) << ',' << format_full(profile.separation[i])
            << ',' << format_full(profile.drift[i]) << ',' << format_full(profile.gap[i])
            << '\n';
    }
}

void write_sweep_csv(const std::filesystem::path& path, const SweepResult& sweep,
                     const ExperimentConfig& config) {
    std::ofstream out = open_out(path);
    out << "# config_hash = " << config::hash(config) << '\n';
    std::istringstream cfg(config::canonical_text(config));
    std::string line;
    while (std::getline(cfg, line)) out << "# " << line << '\n';
    for (std::size_t c = 0; c < sweep.columns.size(); ++c)
        out << sweep.columns[c] << (c + 1 < sweep.columns.size() ? ',' : '\n');
    for (const auto& row : sweep.rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << format_full(row[c]) << (c + 1 < row.size() ? ',' : '\n');
    }
}

void write_witness_scan_csv(const std::filesystem::path& path,
                            const std::vector<double>& gamma_t,
                            const std::vector<double>& trace_w_rho) {
    std::ofstream out = open_out(path);
    out << "gamma_t,trace_W_rho\n";
    for (std::size_t i = 0; i < gamma_t.size(); ++i)
        out << format_full(gamma_t[i]) << ',' << format_full(trace_w_rho[i]) << '\n';
}

void write_budget_scan_csv(const std::filesystem::path& path,
                           const std::vector<double>& densities,
                           const std::vector<double>& exponents, double limit) {
    std::ofstream out = open_out(path);
    out << "n_V,exponent,limit,pass\n";
    for (std::size_t i = 0; i < densities.size(); ++i) {
        out << format_full(densities[i]) << ',' << format_full(exponents[i]) << ','
            << format_full(limit) << ',' << (exponents[i] <= limit ? 1 : 0) << '\n';
    }
}

std::string phase_json(const PhaseBreakdown& phase) {
    nlohmann::ordered_json j;
    j["phi_common_rad"] = phase.phi_common;
    j["dphi_ud_rad"] = phase.dphi_ud;
    j["dphi_du_rad"] = phase.dphi_du;
    j["step1_rad"] = phase.step1;
    j["step2_rad"] = phase.step2;
    j["step3_rad"] = phase.step3;
    j["total_rad"] = phase.total;
    return j.dump(2) + "\n";
}

std::string budget_json(const DecoherenceBudget& budget) {
    nlohmann::ordered_json j;
    j["gamma_air_per_s"] = budget.gamma_air;
    j["lambda_air"] = budget.lambda_air;
    j["lambda_sc"] = budget.lambda_sc;
    j["lambda_e"] = budget.lambda_e;
    j["lambda_a"] = budget.lambda_a;
    j["exponent"] = budget.exponent;
    j["air_contribution"] = budget.air_contribution;
    j["sc_contribution"] = budget.sc_contribution;
    j["e_contribution"] = budget.e_contribution;
    j["a_contribution"] = budget.a_contribution;
    j["dominant_channel"] = budget.dominant_channel;
    j["long_wavelength_ok"] = budget.long_wavelength_ok;
    return j.dump(2) + "\n";
}

std::string plate_json(const PlateAssessment& assessment) {
    nlohmann::ordered_json j;
    j["deflection_max_m"] = assessment.deflection_max;
    j["frequency_rad_per_s"] = assessment.frequency;
    j["ground_spread_m"] = assessment.ground_spread;
    j["which_path_ok"] = assessment.which_path_ok;
    j["length_bound_m"] = assessment.length_bound;
    return j.dump(2) + "\n";
}

std::string feasibility_json(const FeasibilityReport& report) {
    // One flat record; sub-reports carry prefixed keys.
    nlohmann::ordered_json j;
    j["phase_step1_rad"] = report.phase.step1;
    j["phase_step2_rad"] = report.phase.step2;
    j["phase_step3_rad"] = report.phase.step3;
    j["phase_total_rad"] = report.phase.total;
    j["phase_dphi_ud_rad"] = report.phase.dphi_ud;
    j["phase_dphi_du_rad"] = report.phase.dphi_du;
    j["split_m"] = report.split;
    j["center_distance_m"] = report.center_distance;
    j["s_max_m"] = report.s_max;
    j["end_gap_m"] = report.end_gap;
    j["recapture_gap_m"] = report.recapture_gap;
    j["tau1_s"] = report.tau1;
    j["collision_ok"] = report.collision_ok;
    j["recapture_ok"] = report.recapture_ok;
    j["phase_ok"] = report.phase_ok;
    j["decoherence_exponent"] = report.decoherence.exponent;
    j["decoherence_dominant_channel"] = report.decoherence.dominant_channel;
    j["decoherence_long_wavelength_ok"] = report.decoherence.long_wavelength_ok;
    j["witness_ok"] = report.witness_ok;
    j["plate_deflection_max_m"] = report.plate.deflection_max;
    j["plate_ground_spread_m"] = report.plate.ground_spread;
    j["plate_which_path_ok"] = report.plate.which_path_ok;
    j["plate_length_bound_m"] = report.plate.length_bound;
    j["overall"] = report.overall;
    return j.dump(2) + "\n";
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out = open_out(path);
    out << text;
}

RunManifest make_manifest(const ExperimentConfig& config,
                          std::vector<std::string> outputs) {
    RunManifest m;
    m.config_hash = config::hash(config);
    m.tool_version = tool_version;
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm utc{};
    gmtime_r(&t, &utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
    m.timestamp_utc = buf;
    m.outputs = std::move(outputs);
    return m;
}

std::string manifest_json(const RunManifest& manifest) {
    nlohmann::ordered_json j;
    j["config_hash"] = manifest.config_hash;
    j["tool_version"] = manifest.tool_version;
    j["timestamp_utc"] = manifest.timestamp_utc;
    j["outputs"] = manifest.outputs;
    return j.dump(2) + "\n";
}

} // namespace qgem::io
