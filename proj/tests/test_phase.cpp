#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qgem/config.hpp"
#include "qgem/errors.hpp"
#include "qgem/phase.hpp"

using namespace qgem;
using oracles::rel_err;

namespace {

TestMassSpec flagship_mass() {
    return make_test_mass(1e-15, constants::preset("diamond"));
}
const DriveSpec flagship_drive{1e4, 0.5, 1.0, 1e-4};
const GeometrySpec flagship_geom{57.0, 1e-6};

// Profile with the step-2 drift suppressed, for static-limit checks.
TrajectoryProfile zero_drift(TrajectoryProfile p) {
    const double x0 = p.gap[0];
    for (std::size_t i = 0; i < p.times.size(); ++i) {
        p.drift[i] = 0.0;
        p.gap[i] = x0;
        if (i > p.step1_end && i <= p.step2_end) p.separation[i] = p.split;
    }
    p.s_max = 0.0;
    p.tau1 = 0.5;
    return p;
}

} // namespace

TEST_CASE("pairwise phases and the effective-phase identity") {
    SUBCASE("degenerate limits") {
        const auto p0 = phase::pairwise_phases(1e-14, 2e-4, 0.0, 2.5);
        CHECK(p0.dphi_ud == 0.0);
        CHECK(p0.dphi_du == 0.0);
        const auto pt = phase::pairwise_phases(1e-14, 2e-4, 1e-4, 0.0);
        CHECK(pt.phi == 0.0);
        CHECK(pt.dphi_ud == 0.0);
        CHECK(pt.dphi_du == 0.0);
    }

    SUBCASE("identity Phi_eff = dphi_ud + dphi_du over random inputs") {
        std::mt19937 rng(51);
        for (int i = 0; i < 1000; ++i) {
            const double m = oracles::log_uniform(rng, 1e-17, 1e-13);
            const double d = oracles::log_uniform(rng, 1e-5, 1e-3);
            const double dx = d * oracles::uniform(rng, 0.0, 0.95);
            const double t = oracles::uniform(rng, 0.0, 5.0);
            const auto p = phase::pairwise_phases(m, d, dx, t);
            const double eff = phase::effective_phase_static(m, d, dx, t);
            CHECK(std::abs(eff - (p.dphi_ud + p.dphi_du)) <=
                  1e-15 + 1e-12 * std::abs(eff));
        }
    }

    SUBCASE("geometry guard") {
        CHECK_THROWS_AS(phase::pairwise_phases(1e-14, 1e-4, 1e-4, 1.0), GeometryError);
    }
}

TEST_CASE("max phase at the closest-approach distance") {
    CHECK(phase::max_phase_original(1e-14, 0.0, 157e-6, 2.5) == 0.0);

    std::mt19937 rng(52);
    for (int i = 0; i < 200; ++i) {
        const double m = oracles::log_uniform(rng, 1e-16, 1e-13);
        const double A = oracles::log_uniform(rng, 1e-5, 1e-3);
        const double dx = oracles::log_uniform(rng, 1e-7, 1e-3);
        const double t = oracles::uniform(rng, 0.1, 5.0);
        // The two routes agree up to rounding of the individual 1/r terms,
        // which dominate the cancelling bracket when dx << A.
        const double term_scale =
            constants::si().G * m * m * t / (constants::si().hbar * A);
        CHECK(std::abs(phase::max_phase_original(m, dx, A, t) -
                       phase::effective_phase_static(m, A + dx, dx, t)) <=
              1e-11 * term_scale);
    }
}

TEST_CASE("minimum mass for a target phase") {
    const double A = 157e-6;

    SUBCASE("reproduces the original-setup masses") {
        CHECK(rel_err(phase::min_mass_for_phase(1.0, A, 1e6, 0.5, 2.5), 2e-14) < 1.0);
        CHECK(rel_err(phase::min_mass_for_phase(0.1, A, 1e6, 0.5, 2.5), 4e-15) < 1.0);
        CHECK(rel_err(phase::min_mass_for_phase(0.01, A, 1e6, 0.5, 2.5), 1e-15) < 1.0);
    }

    SUBCASE("plug-back into the closest-approach phase") {
        std::mt19937 rng(53);
        const auto& k = constants::si();
        for (int i = 0; i < 300; ++i) {
            const double phi = oracles::log_uniform(rng, 1e-3, 2.0);
            const double Ar = oracles::log_uniform(rng, 5e-5, 5e-4);
            const double dB = oracles::log_uniform(rng, 1e4, 1e7);
            const double tau = oracles::uniform(rng, 0.1, 1.0);
            const double t = oracles::uniform(rng, 0.5, 5.0);
            double m = 0.0;
            try {
                m = phase::min_mass_for_phase(phi, Ar, dB, tau, t);
            } catch (const NoSolutionError&) {
                continue;
            }
            const double dx = 2.0 * k.g_factor * k.mu_B * dB / m * 0.25 * tau * tau;
            CHECK(rel_err(phase::max_phase_original(m, dx, Ar, t), phi) < 1e-6);
        }
    }

    SUBCASE("agrees with a bisection on the defining equation") {
        const auto& k = constants::si();
        const double phi = 1.0;
        const double m_closed = phase::min_mass_for_phase(phi, A, 1e6, 0.5, 2.5);
        const auto phase_of = [&](double m) {
            const double dx = 2.0 * k.g_factor * k.mu_B * 1e6 / m * 0.25 * 0.25;
            return phase::max_phase_original(m, dx, A, 2.5);
        };
        double lo = 1e-18, hi = 1e-10;
        for (int i = 0; i < 200; ++i) {
            const double mid = std::sqrt(lo * hi);
            (phase_of(mid) < phi ? lo : hi) = mid;
        }
        CHECK(rel_err(m_closed, hi) < 1e-6);
    }
}

TEST_CASE("small-split limit") {
    SUBCASE("weak-gradient ceiling near 4e-4 rad") {
        const double phi = phase::small_split_limit(1e4, 0.5, 2.5, 157e-6);
        CHECK(rel_err(phi, 4e-4) < 0.15);
    }
    SUBCASE("limits and scaling") {
        CHECK(phase::small_split_limit(0.0, 0.5, 2.5, 157e-6) == 0.0);
        const double p1 = phase::small_split_limit(1e4, 0.5, 2.5, 157e-6);
        const double p2 = phase::small_split_limit(2e4, 0.5, 2.5, 157e-6);
        CHECK(rel_err(p2, 4.0 * p1) < 1e-12);
    }
}

TEST_CASE("step-2 phase over the free-fall profile") {
    const TestMassSpec spec = flagship_mass();
    const TrajectoryProfile profile =
        kinematics::full_profile(spec, flagship_geom, flagship_drive);

    SUBCASE("static limit: zero drift reduces to the closed form") {
        const TrajectoryProfile frozen = zero_drift(profile);
        const double d = frozen.split + flagship_geom.inner_separation(spec);
        const double expected =
            phase::effective_phase_static(spec.mass, d, frozen.split, 1.0);
        CHECK(rel_err(phase::step2_phase(spec, flagship_geom, frozen), expected) < 1e-6);
    }

    SUBCASE("flagship value near 0.01 rad") {
        CHECK(rel_err(phase::step2_phase(spec, flagship_geom, profile), 0.01) < 0.3);
    }

    SUBCASE("quadrature convergence on step halving") {
        DriveSpec halved = flagship_drive;
        halved.time_step = 0.5e-4;
        const TrajectoryProfile fine =
            kinematics::full_profile(spec, flagship_geom, halved);
        CHECK(rel_err(phase::step2_phase(spec, flagship_geom, profile),
                      phase::step2_phase(spec, flagship_geom, fine)) < 1e-6);
    }
}

TEST_CASE("split-stage closed form against adaptive quadrature") {
    SUBCASE("vanishes with the drive") {
        CHECK(phase::step1_phase(1e-15, 5e-5, 0.0, 0.5) == 0.0);
    }

    SUBCASE("1000 random valid inputs to 1e-8") {
        std::mt19937 rng(54);
        int checked = 0;
        while (checked < 1000) {
            const double m = oracles::log_uniform(rng, 1e-17, 1e-13);
            const double d = oracles::log_uniform(rng, 1e-5, 1e-3);
            const double a = oracles::log_uniform(rng, 1e-6, 1e-2);
            const double tau = oracles::uniform(rng, 0.05, 1.5);
            const double dx = 2.0 * a * 0.25 * tau * tau;
            if (dx >= 0.9 * d || dx < 1e-3 * d) continue;  // stay in the well-conditioned regime
            ++checked;
            const double closed = phase::step1_phase(m, d, a, tau);
            const double quad = phase::step1_phase_quadrature(m, d, a, tau);
            CHECK(rel_err(closed, quad) < 1e-8);
        }
    }

    SUBCASE("validity violation raises and quadrature also refuses") {
        // dx = 2 a (tau/2)^2 = 5e-5 >= d.
        CHECK_THROWS_AS(phase::step1_phase(1e-15, 4e-5, 1e-4, 1.0), GeometryError);
        CHECK_THROWS_AS(phase::step1_phase_quadrature(1e-15, 4e-5, 1e-4, 1.0),
                        GeometryError);
    }

    SUBCASE("pairwise split agrees with quadrature split") {
        std::mt19937 rng(55);
        for (int i = 0; i < 200; ++i) {
            const double m = oracles::log_uniform(rng, 1e-16, 1e-14);
            const double d = oracles::log_uniform(rng, 2e-5, 5e-4);
            const double a = oracles::log_uniform(rng, 1e-5, 1e-3);
            const double tau = oracles::uniform(rng, 0.1, 1.0);
            if (2.0 * a * 0.25 * tau * tau >= 0.9 * d ||
                2.0 * a * 0.25 * tau * tau < 1e-3 * d)
                continue;
            const auto closed = phase::step1_pairwise(m, d, a, tau);
            const auto quad = phase::step1_pairwise_quadrature(m, d, a, tau);
            CHECK(std::abs(closed.dphi_ud - quad.dphi_ud) <=
                  1e-8 * std::abs(quad.sum()) + 1e-18);
            CHECK(std::abs(closed.dphi_du - quad.dphi_du) <=
                  1e-8 * std::abs(quad.sum()) + 1e-18);
        }
    }
}

TEST_CASE("step-3 phase is the shifted split form") {
    const double m = 1e-15;
    const double d = 4.6e-5;
    const double a = 1.85e-4;
    SUBCASE("no drift reduces to step 1 exactly") {
        CHECK(phase::step3_phase(m, d, 0.0, a, 0.5) == phase::step1_phase(m, d, a, 0.5));
    }
    SUBCASE("quadrature agreement after the shift") {
        const double s_max = 2e-6;
        const double tau1 = 0.5414;
        CHECK(rel_err(phase::step3_phase(m, d, s_max, a, tau1),
                      phase::step1_phase_quadrature(m, d - s_max, a, tau1)) < 1e-8);
    }
}

TEST_CASE("total phase breakdown") {
    const ExperimentConfig cfg = config::flagship();
    const PhaseBreakdown b = phase::total_phase(cfg);

    SUBCASE("flagship total near 0.015 rad") {
        CHECK(rel_err(b.total, 0.015) < 0.3);
        CHECK(b.step1 > 0.0);
        CHECK(b.step2 > 0.0);
        CHECK(b.step3 > 0.0);
    }

    SUBCASE("internal identities") {
        CHECK(rel_err(b.total, b.step1 + b.step2 + b.step3) < 1e-12);
        CHECK(rel_err(b.total, b.dphi_ud + b.dphi_du) < 1e-9);
        CHECK(b.dphi_ud < 0.0);
        CHECK(b.dphi_du > 0.0);
        CHECK(b.phi_common > 0.0);
    }

    SUBCASE("scales as m^2 at fixed accelerations and geometry") {
        // Doubling m with dB and N co-scaled keeps a_mag, dx, N R and the
        // drift identical, so the phase scales exactly as m^2.
        ExperimentConfig scaled = cfg;
        scaled.mass_spec = make_test_mass(2e-15, constants::preset("diamond"));
        scaled.drive.field_gradient = 2e4;
        scaled.geometry.separation_multiplier =
            57.0 * cfg.mass_spec.radius() / scaled.mass_spec.radius();
        const PhaseBreakdown b2 = phase::total_phase(scaled);
        CHECK(rel_err(b2.total, 4.0 * b.total) < 1e-9);
    }

    SUBCASE("monotone in flight time and in mass") {
        // Wider geometry so the longer fall stays clear of the plate.
        ExperimentConfig roomy = cfg;
        roomy.geometry.separation_multiplier = 80.0;
        const double base = phase::total_phase(roomy).total;

        ExperimentConfig longer = roomy;
        longer.drive.flight_time = 1.5;
        CHECK(phase::total_phase(longer).total > base);

        ExperimentConfig heavier = roomy;
        heavier.mass_spec = make_test_mass(1.3e-15, constants::preset("diamond"));
        CHECK(phase::total_phase(heavier).total > base);
    }
}
