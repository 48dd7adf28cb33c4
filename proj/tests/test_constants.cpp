#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgem/constants.hpp"

using namespace qgem;

TEST_CASE("physical constants are positive and pinned") {
    const auto& k = constants::si();
    CHECK(k.hbar > 0.0);
    CHECK(k.c > 0.0);
    CHECK(k.G > 0.0);
    CHECK(k.k_b > 0.0);
    CHECK(k.mu_B > 0.0);
    CHECK(k.g_factor == 2.0);
    CHECK(k.m_air == 4.8e-26);
}

TEST_CASE("material presets") {
    const auto& diamond = constants::preset("diamond");
    CHECK(diamond.density == 3500.0);
    CHECK(diamond.dielectric_constant == 5.7);

    const auto& copper = constants::preset("copper");
    CHECK(copper.density == 8960.0);
    CHECK(copper.youngs_modulus == 1.37e11);

    CHECK(diamond.density > 0.0);
    CHECK(diamond.dielectric_constant > 1.0);
    CHECK(copper.youngs_modulus > 0.0);

    CHECK_THROWS_AS(constants::preset("unobtainium"), std::invalid_argument);
}
