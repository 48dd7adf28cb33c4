#include "qgem/constants.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace qgem::constants {

const PhysicalConstants& si() {
    static const PhysicalConstants k{};
    return k;
}

namespace {

constexpr std::array<MaterialPreset, 2> presets = {{
    {"diamond", 3500.0, 5.7, 0.0},
    {"copper", 8960.0, 0.0, 1.37e11},
}};

} // namespace

const MaterialPreset& preset(std::string_view name) {
    for (const auto& p : presets) {
        if (p.name == name) return p;
    }
    throw std::invalid_argument("unknown material preset: " + std::string(name));
}

} // namespace qgem::constants
