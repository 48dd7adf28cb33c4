#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qgem/errors.hpp"
#include "qgem/kinematics.hpp"

using namespace qgem;
using oracles::rel_err;

namespace {

TestMassSpec flagship_mass() {
    return make_test_mass(1e-15, constants::preset("diamond"));
}
const DriveSpec flagship_drive{1e4, 0.5, 1.0, 1e-4};
const GeometrySpec flagship_geom{57.0, 1e-6};

} // namespace

TEST_CASE("magnetic acceleration") {
    const TestMassSpec spec = flagship_mass();
    const auto& k = constants::si();
    const double expected = k.g_factor * k.mu_B * 1e4 / 1e-15;
    CHECK(rel_err(kinematics::magnetic_acceleration(spec, 1e4), expected) < 1e-15);
    CHECK(rel_err(expected, 1.855e-4) < 1e-3);
    CHECK(kinematics::magnetic_acceleration(spec, 0.0) == 0.0);

    const TestMassSpec heavy = make_test_mass(2e-15, constants::preset("diamond"));
    CHECK(rel_err(kinematics::magnetic_acceleration(heavy, 1e4), 0.5 * expected) < 1e-14);
}

TEST_CASE("split size") {
    const TestMassSpec spec = flagship_mass();
    SUBCASE("flagship is 23 um") {
        CHECK(rel_err(kinematics::split_size(spec, flagship_drive), 23e-6) < 0.01);
    }
    SUBCASE("tau^2 scaling and tau = 0") {
        DriveSpec d = flagship_drive;
        const double dx1 = kinematics::split_size(spec, d);
        d.split_time = 1.0;
        CHECK(rel_err(kinematics::split_size(spec, d), 4.0 * dx1) < 1e-14);
        d.split_time = 0.0;
        CHECK(kinematics::split_size(spec, d) == 0.0);
    }
}

TEST_CASE("geometry invariants") {
    const TestMassSpec spec = flagship_mass();
    CHECK(rel_err(flagship_geom.inner_separation(spec), 57.0 * spec.radius()) < 1e-15);
    CHECK(rel_err(flagship_geom.initial_gap(spec),
                  0.5 * 57.0 * spec.radius() - 0.5e-6) < 1e-15);
    CHECK_THROWS_AS((GeometrySpec{0.5, 1e-6}.validate()), ValidationError);
    CHECK_THROWS_AS((GeometrySpec{2.0, 1e-4}.initial_gap(spec)), GeometryError);
}

TEST_CASE("drive invariants") {
    flagship_drive.validate();
    DriveSpec coarse = flagship_drive;
    coarse.time_step = 0.01;  // > tau/100
    CHECK_THROWS_AS(coarse.validate(), ValidationError);
    DriveSpec negative = flagship_drive;
    negative.split_time = 0.0;
    CHECK_THROWS_AS(negative.validate(), ValidationError);
}

TEST_CASE("free-fall drift") {
    const TestMassSpec spec = flagship_mass();

    SUBCASE("zero flight time gives zero drift") {
        DriveSpec d = flagship_drive;
        d.flight_time = 0.0;
        CHECK(kinematics::freefall_drift(spec, flagship_geom, d).s_max == 0.0);
    }

    SUBCASE("flagship drift is about 2 um") {
        const FreeFall fall = kinematics::freefall_drift(spec, flagship_geom, flagship_drive);
        CHECK(rel_err(fall.s_max, 2e-6) < 0.25);
    }

    SUBCASE("step-halving convergence below 1e-6") {
        const double s1 =
            kinematics::freefall_drift(spec, flagship_geom, flagship_drive).s_max;
        DriveSpec halved = flagship_drive;
        halved.time_step = 0.5e-4;
        const double s2 = kinematics::freefall_drift(spec, flagship_geom, halved).s_max;
        CHECK(rel_err(s1, s2) < 1e-6);
    }

    SUBCASE("independent explicit-Euler oracle") {
        const double x0 = flagship_geom.initial_gap(spec);
        const double s_rk4 =
            kinematics::freefall_drift(spec, flagship_geom, flagship_drive).s_max;
        const double s_euler = oracles::euler_drift(spec, x0, 1.0, 1e-6);
        CHECK(rel_err(s_rk4, s_euler) < 1e-4);
    }

    SUBCASE("energy balance along the path") {
        const FreeFall fall = kinematics::freefall_drift(spec, flagship_geom, flagship_drive);
        const double x0 = flagship_geom.initial_gap(spec);
        // Work per unit mass done by the x^-5 force from 0 to s has a closed
        // form: (k/m)/4 ((x0-s)^-4 - x0^-4).
        const double km = casimir::plate_force(spec, 1.0) / spec.mass;  // k/m at unit gap
        const double s = fall.s_max;
        const double work = km / 4.0 * (std::pow(x0 - s, -4.0) - std::pow(x0, -4.0));
        const double kinetic = 0.5 * fall.velocity.back() * fall.velocity.back();
        CHECK(rel_err(kinetic, work) < 1e-4);
    }

    SUBCASE("collision raises") {
        const GeometrySpec tight{5.0, 1e-6};
        CHECK_THROWS_AS(kinematics::freefall_drift(spec, tight, flagship_drive),
                        CollisionError);
    }
}

TEST_CASE("recombination time") {
    const double a_mag = kinematics::magnetic_acceleration(flagship_mass(), 1e4);
    SUBCASE("no drift means tau1 = tau") {
        CHECK(kinematics::recombine_time(flagship_drive, a_mag, 0.0) == 0.5);
    }
    SUBCASE("flagship value") {
        const double tau1 = kinematics::recombine_time(flagship_drive, a_mag, 2e-6);
        const double expected = 2.0 * std::sqrt(0.0625 + 2e-6 / a_mag);
        CHECK(rel_err(tau1, expected) < 1e-14);
        CHECK(rel_err(tau1, 0.54) < 0.01);
    }
    SUBCASE("tau1 exceeds tau whenever drift happened") {
        CHECK(kinematics::recombine_time(flagship_drive, a_mag, 1e-9) > 0.5);
    }
}

TEST_CASE("full three-step profile") {
    const TestMassSpec spec = flagship_mass();
    const TrajectoryProfile p = kinematics::full_profile(spec, flagship_geom, flagship_drive);
    const double a_mag = kinematics::magnetic_acceleration(spec, 1e4);
    const double dx = kinematics::split_size(spec, flagship_drive);
    const double x0 = flagship_geom.initial_gap(spec);

    SUBCASE("markers and duration") {
        CHECK(p.times[p.step1_end] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(p.times[p.step2_end] == doctest::Approx(1.5).epsilon(1e-12));
        CHECK(rel_err(p.times.back(), 0.5 + 1.0 + p.tau1) < 1e-12);
        CHECK(rel_err(p.times.back(), 2.04) < 0.01);
        for (std::size_t i = 1; i < p.times.size(); ++i) CHECK(p.times[i] > p.times[i - 1]);
    }

    SUBCASE("step 1 matches the closed split forms at every sample") {
        for (std::size_t i = 0; i <= p.step1_end; ++i) {
            const double t = p.times[i];
            const double expected = t <= 0.25 ? a_mag * t * t
                                              : dx - a_mag * (0.5 - t) * (0.5 - t);
            CHECK(std::abs(p.separation[i] - expected) <= 1e-12 * dx);
            CHECK(p.drift[i] == 0.0);
        }
        CHECK(rel_err(p.separation[p.step1_end], dx) < 1e-9);
        CHECK(rel_err(p.separation[p.step1_end], 2.0 * a_mag * 0.25 * 0.25) < 1e-9);
    }

    SUBCASE("drift is convex increasing during step 2 and zero elsewhere") {
        const double h = p.step2_dt();
        double prev_rate = 0.0;
        for (std::size_t i = p.step2_begin() + 1; i <= p.step2_end; ++i) {
            const double rate = (p.drift[i] - p.drift[i - 1]) / h;
            CHECK(rate >= 0.0);
            CHECK(rate >= prev_rate - 1e-12);
            prev_rate = rate;
        }
        for (std::size_t i = p.step2_end + 1; i < p.times.size(); ++i)
            CHECK(p.drift[i] == 0.0);
    }

    SUBCASE("gap stays positive and tracks the drift") {
        for (std::size_t i = 0; i < p.times.size(); ++i) {
            CHECK(p.gap[i] > 0.0);
            CHECK(std::abs(p.gap[i] - (x0 - p.drift[i])) <= 1e-18);
        }
    }

    SUBCASE("step 3 closes the interferometer") {
        CHECK(p.separation.back() <= 1e-3 * dx);
        CHECK(rel_err(p.separation[p.step2_end], dx + p.s_max) < 1e-12);
    }

    SUBCASE("zero field gradient degenerates cleanly") {
        DriveSpec d = flagship_drive;
        d.field_gradient = 0.0;
        const TrajectoryProfile z = kinematics::full_profile(spec, flagship_geom, d);
        for (std::size_t i = 0; i < z.times.size(); ++i) {
            CHECK(z.separation[i] == 0.0);
            CHECK(z.drift[i] == 0.0);
        }
        CHECK(z.tau1 == 0.5);
    }
}
