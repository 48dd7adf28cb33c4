#include "qgem/config.hpp"

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "qgem/errors.hpp"

namespace qgem {

void ExperimentConfig::validate() const {
    mass_spec.validate();
    drive.validate();
    if (!(drive.field_gradient > 0.0))
        throw ValidationError("config: field_gradient_T_per_m must be > 0");
    if (!(drive.flight_time > 0.0))
        throw ValidationError("config: t_int_s must be > 0");
    geometry.validate();
    environment.validate();
    plate.validate();
    if (!(placement_uncertainty >= 0.0) || !(placement_uncertainty <= 0.5))
        throw ValidationError("config: u must be in [0, 0.5]");
    if (!(phase_target > 0.0))
        throw ValidationError("config: phase_target_rad must be > 0");
    if (!(im_dielectric >= 0.0))
        throw ValidationError("config: im_dielectric must be >= 0");
    witness_op.validate();
}

namespace config {

ExperimentConfig flagship() {
    ExperimentConfig cfg;
    cfg.material = "diamond";
    cfg.plate_material = "copper";
    cfg.mass_spec = make_test_mass(1e-15, constants::preset(cfg.material));
    cfg.drive = DriveSpec{1e4, 0.5, 1.0, 1e-4};
    cfg.geometry = GeometrySpec{57.0, 1e-6};
    // Operating point: an order of magnitude below the ~1e7 m^-3 threshold
    // density, so the witness criterion carries real margin.
    cfg.environment = EnvironmentSpec{1e6, 4.0, 1.0};
    const auto& plate_mat = constants::preset(cfg.plate_material);
    cfg.plate = PlateSpec{1e-3, 1e-6, plate_mat.density, plate_mat.youngs_modulus};
    cfg.placement_uncertainty = 0.5;
    cfg.phase_target = 0.01;
    cfg.im_dielectric = 1e-4;
    cfg.dephasing = witness::DephasingMode::joint;
    cfg.witness_op = witness::default_witness();
    return cfg;
}

namespace {

double parse_number(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        while (used < value.size() &&
               std::isspace(static_cast<unsigned char>(value[used])))
            ++used;
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ParseError("key '" + key + "': not a number: '" + value + "'");
    }
}

std::string witness_terms_text(const WitnessOperator& w) {
    std::string out;
    for (const auto& [coeff, label] : w.terms) {
        if (!out.empty()) out += coeff < 0 ? " - " : " + ";
        else if (coeff < 0) out += "-";
        out += label;
    }
    return out;
}

} // namespace

ExperimentConfig parse_text(const std::string& text) {
    ExperimentConfig cfg = flagship();
    bool mass_set = false;
    double mass = cfg.mass_spec.mass;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash_pos = line.find('#');
        if (hash_pos != std::string::npos) line.erase(hash_pos);
        const auto strip = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos) return std::string();
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        };
        const std::string stripped = strip(line);
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = strip(stripped.substr(0, eq));
        const std::string value = strip(stripped.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ParseError("line " + std::to_string(line_no) + ": expected key = value");

        if (key == "mass_kg") {
            mass = parse_number(key, value);
            mass_set = true;
        } else if (key == "material") {
            cfg.material = value;
        } else if (key == "plate_material") {
            cfg.plate_material = value;
        } else if (key == "field_gradient_T_per_m") {
            cfg.drive.field_gradient = parse_number(key, value);
        } else if (key == "tau_s") {
            cfg.drive.split_time = parse_number(key, value);
        } else if (key == "t_int_s") {
            cfg.drive.flight_time = parse_number(key, value);
        } else if (key == "dt_s") {
            cfg.drive.time_step = parse_number(key, value);
        } else if (key == "N") {
            cfg.geometry.separation_multiplier = parse_number(key, value);
        } else if (key == "plate_thickness_m") {
            cfg.geometry.plate_thickness = parse_number(key, value);
        } else if (key == "plate_length_m") {
            cfg.plate.length = parse_number(key, value);
        } else if (key == "n_V_per_m3") {
            cfg.environment.number_density = parse_number(key, value);
        } else if (key == "T_ex_K") {
            cfg.environment.external_temperature = parse_number(key, value);
        } else if (key == "T_i_K") {
            cfg.environment.internal_temperature = parse_number(key, value);
        } else if (key == "m_air_kg") {
            cfg.environment.air_molecule_mass = parse_number(key, value);
        } else if (key == "u") {
            cfg.placement_uncertainty = parse_number(key, value);
        } else if (key == "phase_target_rad") {
            cfg.phase_target = parse_number(key, value);
        } else if (key == "im_dielectric") {
            cfg.im_dielectric = parse_number(key, value);
        } else if (key == "dephasing") {
            if (value == "joint")
                cfg.dephasing = witness::DephasingMode::joint;
            else if (value == "per-particle")
                cfg.dephasing = witness::DephasingMode::per_particle;
            else
                throw ParseError("key 'dephasing': expected joint or per-particle");
        } else if (key == "witness") {
            cfg.witness_op = witness::parse_witness(value);
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }

    // Material presets fix density/epsilon (test mass) and density/E (plate);
    // the plate thickness is shared between geometry and plate mechanics.
    const auto& mat = constants::preset(cfg.material);
    if (!(mat.dielectric_constant > 0.0))
        throw ValidationError("config: material '" + cfg.material + "' is not a test-mass dielectric");
    cfg.mass_spec = TestMassSpec{mass_set ? mass : cfg.mass_spec.mass, mat.density,
                                 mat.dielectric_constant};
    const auto& pmat = constants::preset(cfg.plate_material);
    if (!(pmat.youngs_modulus > 0.0))
        throw ValidationError("config: plate_material '" + cfg.plate_material +
                              "' is not a plate material");
    cfg.plate.density = pmat.density;
    cfg.plate.youngs_modulus = pmat.youngs_modulus;
    cfg.plate.thickness = cfg.geometry.plate_thickness;

    cfg.validate();
    return cfg;
}

ExperimentConfig parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str());
}

std::string canonical_text(const ExperimentConfig& cfg) {
    std::map<std::string, std::string> kv;
    const auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    kv["mass_kg"] = num(cfg.mass_spec.mass);
    kv["material"] = cfg.material;
    kv["plate_material"] = cfg.plate_material;
    kv["field_gradient_T_per_m"] = num(cfg.drive.field_gradient);
    kv["tau_s"] = num(cfg.drive.split_time);
    kv["t_int_s"] = num(cfg.drive.flight_time);
    kv["dt_s"] = num(cfg.drive.time_step);
    kv["N"] = num(cfg.geometry.separation_multiplier);
    kv["plate_thickness_m"] = num(cfg.geometry.plate_thickness);
    kv["plate_length_m"] = num(cfg.plate.length);
    kv["n_V_per_m3"] = num(cfg.environment.number_density);
    kv["T_ex_K"] = num(cfg.environment.external_temperature);
    kv["T_i_K"] = num(cfg.environment.internal_temperature);
    kv["m_air_kg"] = num(cfg.environment.air_molecule_mass);
    kv["u"] = num(cfg.placement_uncertainty);
    kv["phase_target_rad"] = num(cfg.phase_target);
    kv["im_dielectric"] = num(cfg.im_dielectric);
    kv["dephasing"] =
        cfg.dephasing == witness::DephasingMode::joint ? "joint" : "per-particle";
    kv["witness"] = witness_terms_text(cfg.witness_op);

    std::string out;
    for (const auto& [k, v] : kv) out += k + " = " + v + "\n";
    return out;
}

std::string hash(const ExperimentConfig& cfg) {
    const std::string text = canonical_text(cfg);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace config
} // namespace qgem
